#include <stdexcept>

#include <doctest.h>

#include "cnr/families.hpp"
#include "cnr/graph.hpp"
#include "cnr/graph6.hpp"
#include "cnr/solvers.hpp"

namespace {
using namespace cnr;
}  // namespace

TEST_CASE("basic family shapes") {
  CHECK(path(4).edge_count() == 3);
  CHECK(cycle(5).edge_count() == 5);
  CHECK(complete(4).edge_count() == 6);
  CHECK(empty_graph(3).edge_count() == 0);
  CHECK(star(5).degree(4) == 4);  // hub carries the last id

  // wheel(5): C_4 plus a vertex adjacent to everything.
  const Graph w = wheel(5);
  CHECK(w.degree(4) == 4);
  for (int v = 0; v < 4; ++v) CHECK(w.degree(v) == 3);

  // fan(4): P_3 plus a dominating vertex.
  const Graph f = fan(4);
  CHECK(f.degree(3) == 3);
  CHECK(f.edge_count() == 5);

  CHECK_THROWS_AS(cycle(2), std::invalid_argument);
  CHECK_THROWS_AS(wheel(3), std::invalid_argument);
  CHECK_THROWS_AS(fan(3), std::invalid_argument);
}

TEST_CASE("gear and accordion") {
  const Graph g2 = gear(2);
  CHECK(g2.order() == 5);
  CHECK(g2.edge_count() == 6);
  CHECK(g2.degree(4) == 2);  // hub

  for (int l = 2; l <= 6; ++l) {
    CHECK(gear(l).order() == 2 * l + 1);
    CHECK(gear(l).degree(2 * l) == l);
    CHECK(accordion(l).order() == 2 * l);
    CHECK(accordion(l).degree(2 * l - 1) == l);
  }
  CHECK(damage_number(gear(4), 1) == 1);
  CHECK(domination_number(accordion(4)) > 2);
  CHECK_THROWS_AS(gear(1), std::invalid_argument);
  CHECK_THROWS_AS(accordion(1), std::invalid_argument);
}

TEST_CASE("spider") {
  CHECK(canonical_form(spider({1, 1, 1})) == canonical_form(star(4)));
  CHECK(canonical_form(spider({2, 2})) == canonical_form(path(5)));
  const Graph s = spider({3, 3, 3});
  CHECK(s.order() == 10);
  CHECK(domination_number(s) == 4);
  CHECK_THROWS_AS(spider({}), std::invalid_argument);
}

TEST_CASE("Petersen graph facts") {
  const Graph p = petersen();
  CHECK(p.order() == 10);
  CHECK(p.max_degree() == 3);
  CHECK(domination_number(p) == 3);
  for (int u = 0; u < 10; ++u)
    for (int v = u + 1; v < 10; ++v) {
      const int common = popcount(p.neighbors(u) & p.neighbors(v));
      CHECK(common == (p.adjacent(u, v) ? 0 : 1));
    }
}

TEST_CASE("head-and-tail graphs") {
  CHECK(h_graph(7).order() == 7);
  CHECK(domination_number(h_graph(9)) == 3);
  CHECK(domination_number(h_graph(13)) == 4);
  CHECK(capture_time(h_graph(10), 1) == ExtNat(6));
  CHECK_THROWS_AS(h_graph(6), std::invalid_argument);
}

TEST_CASE("14-vertex gap-3 graph") {
  const Graph g = gap3_graph();
  CHECK(g.order() == 14);
  CHECK(domination_number(g) == 5);
  CHECK(damage_number(g, 2) == 1);
}

TEST_CASE("four-cycle-with-apex family") {
  // Plain C_4 when the attached graph is empty and there are no leaves.
  CHECK(canonical_form(cop2_safe_vertex_family(Graph(), 0, 0)) ==
        canonical_form(cycle(4)));

  const Graph small = cop2_safe_vertex_family(complete(1), 0, 0);
  CHECK(small.order() == 5);
  CHECK(cop_number(small) == 2);
  CHECK(damage_number(small, 1) == 1);

  const Graph bigger = cop2_safe_vertex_family(complete(2), 1, 2);
  CHECK(bigger.order() == 9);
  CHECK(exists_safe_vertex(bigger).has_value());
}

TEST_CASE("constructors are deterministic") {
  CHECK(emit_graph6(petersen()) == emit_graph6(petersen()));
  CHECK(emit_graph6(h_graph(12)) == emit_graph6(h_graph(12)));
  CHECK(emit_graph6(gap3_graph()) == emit_graph6(gap3_graph()));
}

TEST_CASE("family spec parsing") {
  CHECK(make_family("gear:4") == gear(4));
  CHECK(make_family("petersen") == petersen());
  CHECK(make_family("spider:3,3,3") == spider({3, 3, 3}));
  CHECK(make_family("empty:5") == empty_graph(5));
  CHECK(make_family("hn:12") == h_graph(12));
  CHECK_THROWS_AS(make_family("nosuch:3"), std::invalid_argument);
  CHECK_THROWS_AS(make_family("path:abc"), std::invalid_argument);
}

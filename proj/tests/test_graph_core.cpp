#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "cnr/enumeration.hpp"
#include "cnr/families.hpp"
#include "cnr/graph.hpp"
#include "cnr/graph6.hpp"
#include "cnr/solvers.hpp"

namespace {

using namespace cnr;

std::uint64_t mask(std::initializer_list<int> vs) {
  std::uint64_t m = 0;
  for (int v : vs) m |= bit(v);
  return m;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), edges);
}

bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  std::vector<int> perm(a.order());
  for (int i = 0; i < a.order(); ++i) perm[i] = i;
  do {
    if (relabel(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<Graph> labeled_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint64_t m = 0; m < (1ull << pairs.size()); ++m) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (m >> i & 1) edges.push_back(pairs[i]);
    out.emplace_back(n, edges);
  }
  return out;
}

}  // namespace

TEST_CASE("graph6 parsing of known strings") {
  const Graph k3 = parse_graph6("Bw");
  CHECK(k3.order() == 3);
  CHECK(k3.edge_count() == 3);
  CHECK(k3.adjacent(0, 1));
  CHECK(k3.adjacent(0, 2));
  CHECK(k3.adjacent(1, 2));

  const Graph single = parse_graph6("@");
  CHECK(single.order() == 1);
  CHECK(single.edge_count() == 0);

  const Graph p3 = parse_graph6("Bg");
  CHECK(p3.order() == 3);
  CHECK(p3.edge_count() == 2);
  CHECK(p3.adjacent(0, 1));
  CHECK(p3.adjacent(1, 2));
  CHECK(!p3.adjacent(0, 2));

  // Standard header prefix and trailing newline are tolerated.
  CHECK(parse_graph6(">>graph6<<Bw") == k3);
  CHECK(parse_graph6("Bw\n") == k3);
}

TEST_CASE("graph6 emission of known graphs") {
  CHECK(emit_graph6(complete(3)) == "Bw");
  CHECK(emit_graph6(Graph(2, {})) == "A?");
  CHECK(emit_graph6(path(3)) == "Bg");
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("!!"), ParseError);
  CHECK_THROWS_AS(parse_graph6("Bwx"), ParseError);   // trailing garbage
  CHECK_THROWS_AS(parse_graph6("B"), ParseError);     // truncated
  CHECK_THROWS_AS(parse_graph6("B\x01"), ParseError); // non-printable
}

TEST_CASE("graph6 round-trips on every enumerated graph up to order 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : generate_connected(n)) {
      CAPTURE(n);
      CHECK(parse_graph6(emit_graph6(g)) == g);
    }
  }
}

TEST_CASE("edge list parsing") {
  CHECK(parse_edge_list("n 2 0 1") == complete(2));
  CHECK(parse_edge_list("n 3 0 1 1 2") == path(3));
  CHECK(parse_edge_list("n 4 0 1 1 2 2 3 3 0") == cycle(4));
  CHECK_THROWS_AS(parse_edge_list("n 2 0 2"), ParseError);  // id out of range
  CHECK_THROWS_AS(parse_edge_list("n 2 1 1"), ParseError);  // self-loop
  CHECK_THROWS_AS(parse_edge_list("2 0 1"), ParseError);    // missing header
}

TEST_CASE("canonical form identifies relabelings and separates classes") {
  const Graph p3a(3, {{0, 1}, {1, 2}});
  const Graph p3b(3, {{1, 0}, {0, 2}});
  CHECK(canonical_form(p3a) == canonical_form(p3b));
  CHECK(canonical_form(complete(3)) != canonical_form(p3a));

  std::set<std::string> k3_forms;
  std::vector<int> perm = {0, 1, 2};
  do {
    k3_forms.insert(canonical_form(relabel(complete(3), perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(k3_forms.size() == 1);
}

TEST_CASE("canonical form partitions labeled graphs into the known counts") {
  std::set<std::string> order4, order5;
  for (const Graph& g : labeled_graphs(4)) order4.insert(canonical_form(g));
  for (const Graph& g : labeled_graphs(5)) order5.insert(canonical_form(g));
  CHECK(order4.size() == 11);
  CHECK(order5.size() == 34);
}

TEST_CASE("canonical form agrees with brute-force isomorphism at order 4") {
  const auto all = labeled_graphs(4);
  std::vector<std::string> forms;
  for (const Graph& g : all) forms.push_back(canonical_form(g));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      CHECK((forms[i] == forms[j]) == brute_isomorphic(all[i], all[j]));
}

TEST_CASE("multi-source distances") {
  const auto d1 = distances(path(4), mask({0}));
  CHECK(d1 == std::vector<ExtNat>{ExtNat(0), ExtNat(1), ExtNat(2), ExtNat(3)});

  const auto d2 = distances(cycle(6), mask({0, 3}));
  CHECK(d2 == std::vector<ExtNat>{ExtNat(0), ExtNat(1), ExtNat(1), ExtNat(0),
                                  ExtNat(1), ExtNat(1)});

  const auto d3 = distances(empty_graph(2), mask({0}));
  CHECK(d3[0] == ExtNat(0));
  CHECK(d3[1] == ExtNat::infinity());

  CHECK_THROWS_AS(distances(path(4), 0), std::invalid_argument);
}

TEST_CASE("distance symmetry on the Petersen graph") {
  const Graph p = petersen();
  for (int u = 0; u < p.order(); ++u) {
    const auto du = distances(p, bit(u));
    for (int v = 0; v < u; ++v) CHECK(du[v] == distances(p, bit(v))[u]);
  }
}

TEST_CASE("closed neighborhoods of vertex sets") {
  CHECK(closed_neighborhood(star(5), mask({4})) == star(5).all_vertices());
  CHECK(popcount(closed_neighborhood(petersen(), mask({0}))) == 4);
  CHECK(closed_neighborhood(cycle(5), mask({0, 2})) == mask({0, 1, 2, 3, 4}));
}

TEST_CASE("connectivity") {
  CHECK(is_connected(complete(3)));
  CHECK(!is_connected(empty_graph(2)));
  CHECK(is_connected(gear(4)));
}

TEST_CASE("dismantlability") {
  CHECK(is_dismantlable(path(5)));
  CHECK(!is_dismantlable(petersen()));
  CHECK(!is_dismantlable(cycle(4)));
  CHECK(!is_dismantlable(Graph(2, {})));  // disconnected
  CHECK_THROWS_AS(is_dismantlable(Graph()), std::invalid_argument);
}

TEST_CASE("dismantlable iff one cop wins, orders 2 through 6") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : generate_connected(n))
      CHECK(is_dismantlable(g) == capture_time(g, 1).is_finite());
}

TEST_CASE("trees and chordality") {
  CHECK(is_tree(path(6)));
  CHECK(!is_tree(cycle(4)));
  CHECK(is_chordal(complete(4)));
  CHECK(is_chordal(path(6)));
  CHECK(!is_chordal(cycle(4)));
  CHECK(!is_chordal(cycle(5)));
}

TEST_CASE("girth") {
  CHECK(girth(cycle(5)) == 5);
  CHECK(girth(cycle(4)) == 4);
  CHECK(girth(complete(3)) == 3);
  CHECK(girth(petersen()) == 5);
  CHECK(!girth(path(6)).has_value());
  CHECK(!girth(star(5)).has_value());
}

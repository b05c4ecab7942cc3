#include <algorithm>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "cnr/families.hpp"
#include "cnr/game.hpp"
#include "cnr/graph.hpp"

namespace {

using namespace cnr;

std::uint64_t mask(std::initializer_list<int> vs) {
  std::uint64_t m = 0;
  for (int v : vs) m |= bit(v);
  return m;
}

}  // namespace

TEST_CASE("cop move successors") {
  const auto p3 = cop_move_successors(path(3), {1});
  CHECK(p3 == std::vector<CopConfig>{{0}, {1}, {2}});

  const auto k3 = cop_move_successors(complete(3), {0, 0});
  CHECK(k3.size() == 6);  // all 2-multisets over 3 vertices
  CHECK(std::is_sorted(k3.begin(), k3.end()));

  const auto lone = cop_move_successors(empty_graph(2), {0});
  CHECK(lone == std::vector<CopConfig>{{0}});
}

TEST_CASE("robber move options") {
  CHECK(robber_move_options(path(3), 1) == mask({0, 1, 2}));
  CHECK(robber_move_options(empty_graph(3), 2) == mask({2}));
  CHECK(robber_move_options(petersen(), 0) == mask({0, 1, 4, 5}));
}

TEST_CASE("cop move application") {
  // Star, cop on the center, robber on a leaf: stepping onto the leaf
  // captures with no damage.
  GameState s;
  s.cops = {4};
  s.robber = 0;
  const auto out = apply_cop_move(star(5), s, {0});
  CHECK(out.captured);

  // Gear hub parked while the robber sits on an undominated rim vertex:
  // the rim vertex takes the damage.
  const Graph g = gear(4);
  GameState t;
  t.cops = {8};
  t.robber = 1;  // odd rim vertices are not adjacent to the hub
  const auto stay = apply_cop_move(g, t, {8});
  CHECK(!stay.captured);
  CHECK(stay.damage_gained == 1);
  CHECK(stay.next.damaged == mask({1}));
  CHECK(stay.next.phase == Phase::kRobberToMove);

  // Re-visiting a damaged vertex charges nothing.
  GameState t2 = t;
  t2.damaged = stay.next.damaged;
  const auto again = apply_cop_move(g, t2, {8});
  CHECK(!again.captured);
  CHECK(again.damage_gained == 0);

  // Illegal target configuration is rejected.
  CHECK_THROWS_AS(apply_cop_move(path(3), GameState{Phase::kCopsToMove, {0}, 2, 0}, {2}),
                  std::invalid_argument);
}

TEST_CASE("robber move application") {
  GameState s;
  s.phase = Phase::kRobberToMove;
  s.cops = {1};
  s.robber = 2;
  // Stepping onto a cop is legal and loses.
  CHECK(apply_robber_move(path(3), s, 1).captured);
  // Staying continues play.
  const auto stay = apply_robber_move(path(3), s, 2);
  CHECK(!stay.captured);
  CHECK(stay.next.phase == Phase::kCopsToMove);
  // A non-neighbor target is rejected.
  CHECK_THROWS_AS(apply_robber_move(path(3), s, 0), std::invalid_argument);
}

TEST_CASE("initial placements") {
  CHECK(InitialPlacements(2, 1).all() == std::vector<CopConfig>{{0}, {1}});
  CHECK(InitialPlacements(2, 2).all() ==
        std::vector<CopConfig>{{0, 0}, {0, 1}, {1, 1}});
  CHECK(placement_count(14, 2) == 105);
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= std::min(n, 3); ++k)
      CHECK(InitialPlacements(n, k).all().size() == placement_count(n, k));
  CHECK_THROWS_AS(InitialPlacements(2, 3), std::invalid_argument);
}

TEST_CASE("damage grows by at most one per round and never shrinks") {
  const Graph g = cycle(5);
  GameState s;
  s.cops = {0};
  s.robber = 2;
  for (int round = 0; round < 6; ++round) {
    const std::uint64_t before = s.damaged;
    const auto cm = apply_cop_move(g, s, s.cops);  // cop stays
    REQUIRE(!cm.captured);
    CHECK((cm.next.damaged & before) == before);
    CHECK(popcount(cm.next.damaged) - popcount(before) <= 1);
    s = cm.next;
    // Robber walks away from the cop, wrapping around the cycle.
    const int next = (s.robber + 1) % 5 == 0 ? s.robber : s.robber + 1;
    const auto rm = apply_robber_move(g, s, next);
    REQUIRE(!rm.captured);
    s = rm.next;
  }
}

TEST_CASE("a robber that stays is never captured on its own move") {
  const Graph g = complete(4);
  GameState s;
  s.phase = Phase::kRobberToMove;
  s.cops = {0, 1};
  s.robber = 2;
  CHECK(!apply_robber_move(g, s, 2).captured);
}

TEST_CASE("an adjacent cop always has a capturing move") {
  const Graph g = petersen();
  for (int r = 0; r < g.order(); ++r) {
    for (int c = 0; c < g.order(); ++c) {
      if (c == r || !(g.closed_neighborhood(c) >> r & 1)) continue;
      const auto succ = cop_move_successors(g, {c});
      CHECK(std::find(succ.begin(), succ.end(), CopConfig{r}) != succ.end());
    }
  }
}

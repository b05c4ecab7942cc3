#include <stdexcept>

#include <doctest.h>

#include "cnr/enumeration.hpp"
#include "cnr/families.hpp"
#include "cnr/graph.hpp"
#include "cnr/solvers.hpp"

namespace {
using namespace cnr;
}  // namespace

TEST_CASE("domination number") {
  CHECK(domination_number(petersen()) == 3);
  CHECK(domination_number(h_graph(13)) == 4);
  CHECK(domination_number(complete(7)) == 1);
  CHECK(domination_number(cycle(6)) == 2);
  CHECK(domination_number(empty_graph(4)) == 4);
}

TEST_CASE("k-radius") {
  CHECK(k_radius(petersen(), 1) == ExtNat(2));
  CHECK(k_radius(petersen(), 3) == ExtNat(1));
  CHECK(k_radius(path(7), 1) == ExtNat(3));
  CHECK(k_radius(cycle(6), 2) == ExtNat(1));
  CHECK(k_radius(empty_graph(3), 2) == ExtNat::infinity());
  CHECK(k_radius(empty_graph(3), 3) == ExtNat(0));
  CHECK_THROWS_AS(k_radius(path(3), 0), std::invalid_argument);
  CHECK_THROWS_AS(k_radius(path(3), 4), std::invalid_argument);
}

TEST_CASE("capture time") {
  CHECK(capture_time(petersen(), 2) == ExtNat::infinity());
  CHECK(capture_time(petersen(), 3) == ExtNat(1));
  CHECK(capture_time(h_graph(10), 2) == ExtNat(2));
  CHECK(capture_time(complete(4), 1) == ExtNat(1));
  CHECK(capture_time(cycle(4), 1) == ExtNat::infinity());
  CHECK(capture_time(cycle(4), 4) == ExtNat(0));
  CHECK(capture_time(path(4), 1) == ExtNat(2));
  CHECK_THROWS_AS(capture_time(path(3), 0), std::invalid_argument);
}

TEST_CASE("cop number") {
  CHECK(cop_number(petersen()) == 3);
  CHECK(cop_number(path(5)) == 1);
  CHECK(cop_number(empty_graph(3)) == 3);
  CHECK(cop_number(cycle(4)) == 2);
}

TEST_CASE("damage number") {
  CHECK(damage_number(petersen(), 1) == 5);
  CHECK(damage_number(petersen(), 2) == 2);
  CHECK(damage_number(petersen(), 3) == 0);
  CHECK(damage_number(gear(4), 1) == 1);
  CHECK(damage_number(star(6), 1) == 0);
  CHECK(damage_number(path(4), 1) == 1);
  CHECK_THROWS_AS(damage_number(path(3), 4), std::invalid_argument);
}

TEST_CASE("independent damage check implementation") {
  CHECK(damage_oracle(complete(2), 1) == 0);
  CHECK(damage_oracle(cycle(4), 1) == 1);
  for (int n = 2; n <= 4; ++n)
    for (const Graph& g : generate_connected(n))
      for (int k = 1; k <= std::min(2, n); ++k)
        CHECK(damage_number(g, k) == damage_oracle(g, k));
}

TEST_CASE("cop throttling") {
  const auto p = cop_throttling(petersen());
  CHECK(p.value == ExtNat(4));
  CHECK(p.witness_k == 3);
  CHECK(cop_throttling(gear(4)).value == ExtNat(4));
  CHECK(cop_throttling(complete(2)).value == ExtNat(2));
}

TEST_CASE("damage throttling") {
  const auto p = damage_throttling(petersen());
  CHECK(p.value == 3);
  CHECK(p.witness_k == 3);
  CHECK(damage_throttling(empty_graph(5)).value == 2);
  CHECK(damage_throttling(gear(4)).value == 2);
  CHECK(damage_throttling(gear(4)).witness_k == 1);
}

TEST_CASE("top-degree parking bound") {
  CHECK(damage_upper_bound_topdeg(star(6), 1) == 0);
  CHECK(damage_upper_bound_topdeg(petersen(), 1) == 6);
  CHECK(damage_upper_bound_topdeg(gear(4), 1) == 4);
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : generate_connected(n))
      for (int k = 1; k <= n; ++k)
        CHECK(damage_number(g, k) <= damage_upper_bound_topdeg(g, k));
}

TEST_CASE("single-vertex edge cover") {
  CHECK(exists_safe_vertex(star(5)).has_value());
  CHECK(exists_safe_vertex(cycle(4)) == 0);  // least such vertex
  CHECK(!exists_safe_vertex(cycle(6)).has_value());
}

TEST_CASE("parameter bundle consistency") {
  const ParamBundle b = compute_bundle(complete(2));
  CHECK(b.n == 2);
  CHECK(b.cop == 1);
  CHECK(b.gamma == 1);
  CHECK(b.th_c == ExtNat(2));
  CHECK(b.th_d == 1);
  CHECK(b.capt.size() == 2);
  CHECK(b.capt[0] == ExtNat(1));
  CHECK(b.capt[1] == ExtNat(0));
  CHECK(b.dmg[0] == 0);

  const ParamBundle pb = compute_bundle(petersen());
  CHECK(pb.cop == 3);
  CHECK(pb.gamma == 3);
  CHECK(pb.th_c == ExtNat(4));
  CHECK(pb.th_d == 3);
  CHECK(pb.dmg[0] == 5);
  CHECK(pb.dmg[1] == 2);
  CHECK(pb.rad[0] == ExtNat(2));
  CHECK(pb.capt[2] == ExtNat(1));
}

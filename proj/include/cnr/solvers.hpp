#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cnr/extnat.hpp"
#include "cnr/game.hpp"
#include "cnr/graph.hpp"

namespace cnr {

/// Exact domination number (branch and bound; exact at desk scale).
int domination_number(const Graph& g);

/// Minimum over k-subsets S of max_v d(S, v); infinity iff no k-subset
/// reaches every vertex (disconnected inputs).
ExtNat k_radius(const Graph& g, int k);

/// Optimal game length with k cops: rounds until capture under optimal
/// play by both sides, minimized over initial cop placements after the
/// robber responds worst-case. 0 iff k = n; infinity iff k cops cannot
/// win. Requires 1 <= k <= n.
ExtNat capture_time(const Graph& g, int k);

/// Least k with finite capture time.
int cop_number(const Graph& g);

/// Optimal number of distinct vertices the robber damages against k cops
/// (both sides optimal, cops minimize). A vertex is charged when the
/// robber ends a cop move uncaptured on it. Requires 1 <= k <= n.
int damage_number(const Graph& g, int k);

/// Independent check implementation for damage_number: plain value
/// iteration over full (cops, robber, damaged-set) states, with the
/// variant rule that damage for the current vertex is withheld until the
/// robber survives its own move (a robber stepping onto a cop forfeits
/// it). Both rules provably agree on the optimal value; this routine
/// exists so the main solver can be validated against a different code
/// path. horizon > 0 caps the number of sweeps; 0 means run to fixpoint.
int damage_oracle(const Graph& g, int k, std::uint64_t horizon = 0);

struct CopThrottling {
  ExtNat value;
  int witness_k = 0;  // least k attaining the minimum
};
/// min_k (k + capt_k), over k with finite capture time.
CopThrottling cop_throttling(const Graph& g);

struct DamageThrottling {
  int value = 0;
  int witness_k = 0;
};
/// min_k (k + dmg_k).
DamageThrottling damage_throttling(const Graph& g);

/// Upper bound on dmg_k from parking cops on a maximum-degree-multiset
/// k-subset: min over such subsets S of n - |N[S]|.
int damage_upper_bound_topdeg(const Graph& g, int k);

/// Least vertex v such that every edge of g meets N[v]; nullopt if none.
std::optional<int> exists_safe_vertex(const Graph& g);

/// Everything the classifier reports for one graph. capt/dmg/rad are
/// indexed by k-1 for k = 1..n.
struct ParamBundle {
  std::string g6;
  int n = 0;
  int cop = 0;
  int gamma = 0;
  std::vector<ExtNat> capt;
  std::vector<int> dmg;
  std::vector<ExtNat> rad;
  ExtNat th_c;
  int th_d = 0;
  int witness_k_thc = 0;
  int witness_k_thd = 0;
};

ParamBundle compute_bundle(const Graph& g);

}  // namespace cnr

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cnr/game.hpp"
#include "cnr/graph.hpp"

namespace cnr {

/// N[support(c)]: vertices occupied by or adjacent to a cop.
std::uint64_t guarded_set(const Graph& g, const CopConfig& cops);

/// One step of the girth-5 evasion strategy. Odd rounds: the unguarded
/// neighbor with the fewest damaged neighbors; even rounds: any unguarded
/// undamaged neighbor. Ties break to the smallest id; nullopt when no
/// qualifying neighbor exists. An optional view map substitutes each
/// cop's vertex before guard computation (used to treat cops sitting on
/// an attached path as if they stood on its attachment vertex).
/// Precondition: girth(g) >= 5.
std::optional<int> evasion_robber_step(const Graph& g, const GameState& s,
                                       int round,
                                       const std::vector<int>* cop_view = nullptr);

/// kStationary cops hold their vertices but capture a robber inside a
/// cop's closed neighborhood (a parked cop still protects N[v]);
/// kShadow cops step along shortest paths toward the robber.
enum class CopStrategy { kStationary, kShadow, kScripted };
enum class RobberStrategy { kEvasion, kScripted };

struct SimConfig {
  CopStrategy cop_strategy = CopStrategy::kStationary;
  RobberStrategy robber_strategy = RobberStrategy::kEvasion;
  CopConfig cops;                      // initial placement (stationary/shadow)
  std::vector<CopConfig> cop_script;   // per-round configs; [0] = placement
  int robber_start = -1;               // -1: smallest unguarded vertex
  std::vector<int> robber_script;      // per-round vertices; [0] = placement
  int rounds = 1;
  std::vector<int> cop_view;           // optional quotient map, size n
};

struct SimRound {
  CopConfig cops;
  int robber = -1;
  std::optional<int> newly_damaged;
  bool captured = false;
};

struct SimTrace {
  CopConfig initial_cops;
  int initial_robber = -1;
  std::vector<SimRound> rounds;
  int damage_count = 0;
  bool captured = false;
  bool robber_stalled = false;  // evasion ran out of qualifying moves
};

/// Runs the round protocol for the configured strategies. A stalled
/// evasion robber stays put for the remaining rounds (staying is always
/// legal, and an evasion robber is never in a stationary cop's reach).
SimTrace simulate(const Graph& g, const SimConfig& config);

std::string trace_json(const SimTrace& trace);

}  // namespace cnr

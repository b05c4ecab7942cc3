#pragma once

#include <cstdint>
#include <vector>

#include "cnr/graph.hpp"

namespace cnr {

/// Cop positions as a sorted multiset of vertex ids (cops may stack).
using CopConfig = std::vector<int>;

/// Set of vertices holding at least one cop.
std::uint64_t support(const CopConfig& cops);

enum class Phase { kCopsToMove, kRobberToMove };

struct GameState {
  Phase phase = Phase::kCopsToMove;
  CopConfig cops;
  int robber = -1;
  std::uint64_t damaged = 0;
};

struct RoundOutcome {
  bool captured = false;
  GameState next;        // meaningful only when !captured
  int damage_gained = 0; // 0 or 1
};

/// All cop configurations reachable in one simultaneous move: every cop
/// steps within its closed neighborhood. Sorted, duplicate-free.
std::vector<CopConfig> cop_move_successors(const Graph& g, const CopConfig& cops);

/// Closed neighborhood of the robber's vertex (staying put is a move).
std::uint64_t robber_move_options(const Graph& g, int robber);

/// Cops move to `to` (must be a legal successor). Capture ends the game;
/// otherwise the robber's current vertex becomes damaged if it was not
/// already (charged at this step: the robber has now survived the round
/// it spent there).
RoundOutcome apply_cop_move(const Graph& g, const GameState& s, const CopConfig& to);

/// Robber steps to r2 within its closed neighborhood. Moving onto a cop is
/// legal and ends the game by capture.
RoundOutcome apply_robber_move(const Graph& g, const GameState& s, int r2);

/// Number of k-multisets over n vertices: C(n+k-1, k).
std::uint64_t placement_count(int n, int k);

/// Lexicographic enumeration of all initial k-cop placements.
class InitialPlacements {
 public:
  InitialPlacements(int n, int k);

  class iterator {
   public:
    using value_type = CopConfig;
    const CopConfig& operator*() const { return cur_; }
    iterator& operator++();
    bool operator!=(const iterator& o) const { return !done_ || !o.done_; }

   private:
    friend class InitialPlacements;
    iterator(int n, int k, bool done);
    int n_;
    CopConfig cur_;
    bool done_;
  };

  iterator begin() const { return iterator(n_, k_, false); }
  iterator end() const { return iterator(n_, k_, true); }

  /// Materialize the full list (test convenience; callers that only scan
  /// should iterate instead).
  std::vector<CopConfig> all() const;

 private:
  int n_, k_;
};

}  // namespace cnr

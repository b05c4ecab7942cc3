#include "cnr/simulate.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace cnr {

std::uint64_t guarded_set(const Graph& g, const CopConfig& cops) {
  return closed_neighborhood(g, support(cops));
}

std::optional<int> evasion_robber_step(const Graph& g, const GameState& s,
                                       int round,
                                       const std::vector<int>* cop_view) {
  const auto gg = girth(g);
  if (!gg || *gg < 5)
    throw std::invalid_argument("evasion strategy requires girth >= 5");
  CopConfig viewed = s.cops;
  if (cop_view) {
    if (cop_view->size() != static_cast<std::size_t>(g.order()))
      throw std::invalid_argument("cop view map has wrong size");
    for (int& c : viewed) c = (*cop_view)[c];
    std::sort(viewed.begin(), viewed.end());
  }
  const std::uint64_t guarded = guarded_set(g, viewed);
  const std::uint64_t candidates = g.neighbors(s.robber) & ~guarded;
  if (round % 2 == 1) {
    // Fewest damaged neighbors, smallest id on ties.
    int best = -1, best_count = 0;
    for_each_bit(candidates, [&](int v) {
      const int dc = popcount(g.neighbors(v) & s.damaged);
      if (best < 0 || dc < best_count) {
        best = v;
        best_count = dc;
      }
    });
    if (best < 0) return std::nullopt;
    return best;
  }
  const std::uint64_t fresh = candidates & ~s.damaged;
  if (!fresh) return std::nullopt;
  return lowest_bit(fresh);
}

namespace {

CopConfig shadow_move(const Graph& g, const CopConfig& cops, int robber) {
  const auto dist = distances(g, bit(robber));
  CopConfig next;
  for (int c : cops) {
    int best = c;
    ExtNat best_d = dist[c];
    for_each_bit(g.closed_neighborhood(c), [&](int v) {
      if (dist[v] < best_d || (dist[v] == best_d && v < best)) {
        best = v;
        best_d = dist[v];
      }
    });
    next.push_back(best);
  }
  std::sort(next.begin(), next.end());
  return next;
}

}  // namespace

SimTrace simulate(const Graph& g, const SimConfig& config) {
  if (config.rounds < 1) throw std::invalid_argument("simulate: rounds >= 1");
  const bool scripted_cops = config.cop_strategy == CopStrategy::kScripted;
  const bool scripted_robber = config.robber_strategy == RobberStrategy::kScripted;
  if (scripted_cops &&
      config.cop_script.size() < static_cast<std::size_t>(config.rounds) + 1)
    throw std::invalid_argument("simulate: cop script shorter than rounds");
  if (scripted_robber &&
      config.robber_script.size() < static_cast<std::size_t>(config.rounds) + 1)
    throw std::invalid_argument("simulate: robber script shorter than rounds");

  SimTrace trace;
  GameState state;
  state.cops = scripted_cops ? config.cop_script[0] : config.cops;
  if (state.cops.empty())
    throw std::invalid_argument("simulate: no initial cop placement");
  trace.initial_cops = state.cops;

  int robber;
  if (scripted_robber) {
    robber = config.robber_script[0];
  } else if (config.robber_start >= 0) {
    robber = config.robber_start;
  } else {
    // Smallest vertex neither occupied by nor adjacent to a cop; fall
    // back to the smallest unoccupied vertex.
    const std::uint64_t unguarded = g.all_vertices() & ~guarded_set(g, state.cops);
    const std::uint64_t unoccupied = g.all_vertices() & ~support(state.cops);
    if (unguarded)
      robber = lowest_bit(unguarded);
    else if (unoccupied)
      robber = lowest_bit(unoccupied);
    else
      robber = 0;
  }
  state.robber = robber;
  trace.initial_robber = robber;
  if (support(state.cops) >> robber & 1) {
    trace.captured = true;  // placed onto a cop (scripted robber only)
    return trace;
  }

  for (int round = 1; round <= config.rounds; ++round) {
    SimRound rec;
    CopConfig to;
    switch (config.cop_strategy) {
      case CopStrategy::kStationary: {
        // Threat semantics: the cops hold their vertices, but a cop with
        // the robber in reach steps onto it.
        to = state.cops;
        for (int& c : to) {
          if (g.closed_neighborhood(c) >> state.robber & 1) {
            c = state.robber;
            break;
          }
        }
        std::sort(to.begin(), to.end());
        break;
      }
      case CopStrategy::kShadow: to = shadow_move(g, state.cops, state.robber); break;
      case CopStrategy::kScripted: {
        to = config.cop_script[round];
        std::sort(to.begin(), to.end());
        break;
      }
    }
    RoundOutcome cop_out = apply_cop_move(g, state, to);
    rec.cops = to;
    if (cop_out.captured) {
      rec.robber = state.robber;
      rec.captured = true;
      trace.rounds.push_back(std::move(rec));
      trace.captured = true;
      return trace;
    }
    state = cop_out.next;
    if (cop_out.damage_gained) {
      rec.newly_damaged = cop_out.next.robber;  // pre-move vertex
      ++trace.damage_count;
    }

    int r2;
    if (scripted_robber) {
      r2 = config.robber_script[round];
    } else {
      const auto step = evasion_robber_step(
          g, state, round, config.cop_view.empty() ? nullptr : &config.cop_view);
      if (step) {
        r2 = *step;
      } else {
        trace.robber_stalled = true;
        r2 = state.robber;  // stay put for the rest of the run
      }
    }
    RoundOutcome rob_out = apply_robber_move(g, state, r2);
    if (rob_out.captured) {
      rec.robber = r2;
      rec.captured = true;
      trace.rounds.push_back(std::move(rec));
      trace.captured = true;
      return trace;
    }
    state = rob_out.next;
    rec.robber = state.robber;
    trace.rounds.push_back(std::move(rec));
  }
  return trace;
}

std::string trace_json(const SimTrace& trace) {
  nlohmann::json j;
  j["initial_cops"] = trace.initial_cops;
  j["initial_robber"] = trace.initial_robber;
  j["rounds"] = nlohmann::json::array();
  for (std::size_t i = 0; i < trace.rounds.size(); ++i) {
    const SimRound& r = trace.rounds[i];
    nlohmann::json jr;
    jr["round"] = i + 1;
    jr["cops"] = r.cops;
    jr["robber"] = r.robber;
    if (r.newly_damaged)
      jr["newly_damaged"] = *r.newly_damaged;
    else
      jr["newly_damaged"] = nullptr;
    jr["captured"] = r.captured;
    j["rounds"].push_back(std::move(jr));
  }
  j["damage_count"] = trace.damage_count;
  j["captured"] = trace.captured;
  j["robber_stalled"] = trace.robber_stalled;
  return j.dump(2) + "\n";
}

}  // namespace cnr

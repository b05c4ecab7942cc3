#include "cnr/solvers.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "cnr/graph6.hpp"

namespace cnr {

namespace {

void check_k(const Graph& g, int k, const char* who) {
  if (k < 1 || k > g.order())
    throw std::invalid_argument(std::string(who) + ": k must be in 1..n");
}

int greedy_cover_size(const Graph& g) {
  const std::uint64_t all = g.all_vertices();
  std::uint64_t covered = 0;
  int s = 0;
  while (covered != all) {
    int best = -1, gain = -1;
    for (int v = 0; v < g.order(); ++v) {
      const int gn = popcount(g.closed_neighborhood(v) & ~covered);
      if (gn > gain) {
        gain = gn;
        best = v;
      }
    }
    covered |= g.closed_neighborhood(best);
    ++s;
  }
  return s;
}

bool cover_exists(const Graph& g, std::uint64_t covered, int budget, int dmax) {
  const std::uint64_t all = g.all_vertices();
  if (covered == all) return true;
  if (budget == 0) return false;
  if (popcount(all & ~covered) > budget * (dmax + 1)) return false;
  const int v = lowest_bit(all & ~covered);
  bool found = false;
  for_each_bit(g.closed_neighborhood(v), [&](int u) {
    if (found) return;
    if (cover_exists(g, covered | g.closed_neighborhood(u), budget - 1, dmax))
      found = true;
  });
  return found;
}

}  // namespace

int domination_number(const Graph& g) {
  const int ub = greedy_cover_size(g);
  const int dmax = g.max_degree();
  const int lb = (g.order() + dmax) / (dmax + 1);
  for (int s = lb; s < ub; ++s)
    if (cover_exists(g, 0, s, dmax)) return s;
  return ub;
}

ExtNat k_radius(const Graph& g, int k) {
  check_k(g, k, "k_radius");
  const int n = g.order();
  ExtNat best = ExtNat::infinity();
  std::vector<int> pick(k);
  // Enumerate k-subsets by recursion on the least element.
  auto rec = [&](auto&& self, int depth, int from) -> void {
    if (depth == k) {
      std::uint64_t src = 0;
      for (int v : pick) src |= bit(v);
      const auto d = distances(g, src);
      ExtNat ecc = 0;
      for (const auto& dv : d) ecc = std::max(ecc, dv);
      best = std::min(best, ecc);
      return;
    }
    for (int v = from; v <= n - (k - depth); ++v) {
      pick[depth] = v;
      self(self, depth + 1, v + 1);
    }
  };
  rec(rec, 0, 0);
  return best;
}

namespace {

/// Shared machinery for the game solvers: all k-cop configurations (as
/// sorted multisets, in lexicographic order) with their one-move successor
/// lists and support masks.
struct ConfigSpace {
  int n, k;
  std::vector<CopConfig> configs;
  std::vector<std::vector<int>> succ;
  std::vector<std::uint64_t> supp;   // occupied vertices
  std::vector<std::uint64_t> nsupp;  // N[occupied]

  ConfigSpace(const Graph& g, int kk) : n(g.order()), k(kk) {
    configs = InitialPlacements(n, k).all();
    supp.reserve(configs.size());
    nsupp.reserve(configs.size());
    for (const auto& c : configs) {
      supp.push_back(support(c));
      nsupp.push_back(closed_neighborhood(g, supp.back()));
    }
    succ.resize(configs.size());
    for (std::size_t i = 0; i < configs.size(); ++i) {
      for (const auto& s : cop_move_successors(g, configs[i]))
        succ[i].push_back(index_of(s));
    }
  }

  int index_of(const CopConfig& c) const {
    const auto it = std::lower_bound(configs.begin(), configs.end(), c);
    return static_cast<int>(it - configs.begin());
  }
};

constexpr std::uint32_t kUnreached = UINT32_MAX;

}  // namespace

ExtNat capture_time(const Graph& g, int k) {
  check_k(g, k, "capture_time");
  const int n = g.order();
  if (k == n) return 0;
  if (k >= domination_number(g)) return 1;  // k < n, so 0 is out of reach
  const ConfigSpace cs(g, k);
  const std::size_t nc = cs.configs.size();
  // V[ci*n+r]: optimal rounds to capture from (cops to move, robber at r).
  std::vector<std::uint32_t> V(nc * n, kUnreached);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t ci = 0; ci < nc; ++ci) {
      for (int r = 0; r < n; ++r) {
        std::uint32_t best = kUnreached;
        for (int c2 : cs.succ[ci]) {
          std::uint32_t val;
          if (cs.supp[c2] >> r & 1) {
            val = 1;
          } else {
            std::uint32_t worst = 0;
            for_each_bit(g.closed_neighborhood(r) & ~cs.supp[c2], [&](int r2) {
              worst = std::max(worst, V[c2 * n + r2]);
            });
            val = worst == kUnreached ? kUnreached : 1 + worst;
          }
          best = std::min(best, val);
        }
        if (best < V[ci * n + r]) {
          V[ci * n + r] = best;
          changed = true;
        }
      }
    }
  }
  std::uint32_t best = kUnreached;
  for (std::size_t ci = 0; ci < nc; ++ci) {
    std::uint32_t worst = 0;
    for (int r = 0; r < n; ++r)
      if (!(cs.supp[ci] >> r & 1)) worst = std::max(worst, V[ci * n + r]);
    best = std::min(best, worst);
  }
  return best == kUnreached ? ExtNat::infinity() : ExtNat(best);
}

int cop_number(const Graph& g) {
  for (int k = 1; k <= g.order(); ++k)
    if (capture_time(g, k).is_finite()) return k;
  return g.order();  // unreachable: k = n always captures
}

namespace {

/// Damage game solver. States are grouped by the set D of already-damaged
/// vertices while the robber sits inside D; crossing to an undamaged
/// vertex charges one new damage point and hands off to the stratum of
/// the enlarged set, which depends only on strictly larger D, so the
/// recursion is well founded. Within a stratum, plain value iteration
/// from zero converges to the least fixpoint, which is the game value.
struct DamageSolver {
  const Graph& g;
  ConfigSpace cs;
  int n;

  struct Stratum {
    std::vector<int> verts;   // members of D, ascending
    std::vector<int> pos;     // vertex -> slot in verts, -1 outside
    std::vector<std::int16_t> vc, vr;  // [ci * |D| + slot]
  };
  std::unordered_map<std::uint64_t, Stratum> strata;

  DamageSolver(const Graph& gr, int k) : g(gr), cs(gr, k), n(gr.order()) {}

  // Value with cops to move and the robber on r, where r may still be
  // undamaged: 0 on immediate capture, else one fresh damage point plus
  // the in-stratum value after r joins D.
  int boundary(int ci, int r, std::uint64_t D) {
    if (cs.nsupp[ci] >> r & 1) return 0;
    const Stratum& st = solve(D | bit(r));
    return 1 + st.vc[ci * st.verts.size() + st.pos[r]];
  }

  const Stratum& solve(std::uint64_t D) {
    auto it = strata.find(D);
    if (it != strata.end()) return it->second;
    Stratum& st = strata.try_emplace(D).first->second;  // node stays put
    st.pos.assign(n, -1);
    for_each_bit(D, [&](int v) {
      st.pos[v] = static_cast<int>(st.verts.size());
      st.verts.push_back(v);
    });
    const std::size_t width = st.verts.size();
    const std::size_t nc = cs.configs.size();
    st.vc.assign(nc * width, 0);
    st.vr.assign(nc * width, 0);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t ci = 0; ci < nc; ++ci) {
        for (std::size_t p = 0; p < width; ++p) {
          const int r = st.verts[p];
          const std::size_t idx = ci * width + p;
          std::int16_t v;
          if (cs.nsupp[ci] >> r & 1) {
            v = 0;
          } else {
            v = INT16_MAX;
            for (int c2 : cs.succ[ci])
              v = std::min(v, st.vr[c2 * width + p]);
          }
          if (v != st.vc[idx]) {
            st.vc[idx] = v;
            changed = true;
          }
          std::int16_t worst = 0;
          for_each_bit(g.closed_neighborhood(r) & ~cs.supp[ci], [&](int r2) {
            const std::int16_t w =
                (D >> r2 & 1)
                    ? st.vc[ci * width + st.pos[r2]]
                    : static_cast<std::int16_t>(boundary(ci, r2, D));
            worst = std::max(worst, w);
          });
          if (worst != st.vr[idx]) {
            st.vr[idx] = worst;
            changed = true;
          }
        }
      }
    }
    return st;
  }
};

}  // namespace

int damage_number(const Graph& g, int k) {
  check_k(g, k, "damage_number");
  const int n = g.order();
  if (k >= domination_number(g)) return 0;
  DamageSolver ds(g, k);
  const std::size_t nc = ds.cs.configs.size();
  // Try placements in order of their trivial upper bound (vertices left
  // undominated), so a good incumbent arrives early and later placements
  // can be abandoned as soon as some robber reply matches it.
  std::vector<int> order(nc);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> ub(nc);
  for (std::size_t ci = 0; ci < nc; ++ci) ub[ci] = n - popcount(ds.cs.nsupp[ci]);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return ub[a] < ub[b]; });
  int best = INT_MAX;
  for (int ci : order) {
    int worst = 0;
    for (int r = 0; r < n && worst < best; ++r) {
      if (ds.cs.supp[ci] >> r & 1) continue;
      worst = std::max(worst, ds.boundary(ci, r, 0));
    }
    best = std::min(best, worst);
    if (best == 0) break;
  }
  return best;
}

int damage_oracle(const Graph& g, int k, std::uint64_t horizon) {
  check_k(g, k, "damage_oracle");
  const int n = g.order();
  if (n > 16) throw std::invalid_argument("damage_oracle: order capped at 16");
  const ConfigSpace cs(g, k);
  const std::size_t nc = cs.configs.size();
  const std::size_t nd = std::size_t{1} << n;
  // vc[(ci*n + r)*nd + D]; vr adds a flag for damage still pending on r.
  auto at = [&](std::size_t ci, int r, std::uint64_t D) {
    return (ci * n + r) * nd + D;
  };
  std::vector<std::int16_t> vc(nc * n * nd, 0);
  std::vector<std::int16_t> vr0(nc * n * nd, 0), vr1(nc * n * nd, 0);
  bool changed = true;
  std::uint64_t sweeps = 0;
  while (changed && (horizon == 0 || sweeps < horizon)) {
    changed = false;
    ++sweeps;
    for (std::size_t ci = 0; ci < nc; ++ci) {
      for (int r = 0; r < n; ++r) {
        for (std::uint64_t D = 0; D < nd; ++D) {
          std::int16_t best = INT16_MAX;
          for (int c2 : cs.succ[ci]) {
            std::int16_t v;
            if (cs.supp[c2] >> r & 1)
              v = 0;
            else
              v = (D >> r & 1) ? vr0[at(c2, r, D)] : vr1[at(c2, r, D)];
            best = std::min(best, v);
          }
          if (best != vc[at(ci, r, D)]) {
            vc[at(ci, r, D)] = best;
            changed = true;
          }
          for (int pending = 0; pending < 2; ++pending) {
            std::int16_t worst = 0;
            for_each_bit(g.closed_neighborhood(r), [&](int r2) {
              std::int16_t v;
              if (cs.supp[ci] >> r2 & 1) {
                v = 0;  // steps onto a cop: the pending point is retracted
              } else if (pending) {
                v = static_cast<std::int16_t>(1 + vc[at(ci, r2, D | bit(r))]);
              } else {
                v = vc[at(ci, r2, D)];
              }
              worst = std::max(worst, v);
            });
            auto& slot = pending ? vr1[at(ci, r, D)] : vr0[at(ci, r, D)];
            if (worst != slot) {
              slot = worst;
              changed = true;
            }
          }
        }
      }
    }
  }
  std::int16_t best = INT16_MAX;
  for (std::size_t ci = 0; ci < nc; ++ci) {
    std::int16_t worst = 0;
    for (int r = 0; r < n; ++r)
      if (!(cs.supp[ci] >> r & 1)) worst = std::max(worst, vc[at(ci, r, 0)]);
    best = std::min(best, worst);
  }
  return best;
}

CopThrottling cop_throttling(const Graph& g) {
  CopThrottling out{ExtNat::infinity(), 0};
  for (int k = 1; k <= g.order(); ++k) {
    if (out.value.is_finite() &&
        static_cast<std::uint64_t>(k) >= out.value.value())
      break;
    const ExtNat ct = capture_time(g, k);
    if (ct.is_infinite()) continue;
    const ExtNat cand = ct + k;
    if (cand < out.value) {
      out.value = cand;
      out.witness_k = k;
    }
  }
  return out;
}

DamageThrottling damage_throttling(const Graph& g) {
  const int gam = domination_number(g);
  DamageThrottling out{INT_MAX, 0};
  for (int k = 1; k <= gam; ++k) {
    if (k >= out.value) break;
    const int cand = k + damage_number(g, k);
    if (cand < out.value) {
      out.value = cand;
      out.witness_k = k;
    }
  }
  return out;
}

int damage_upper_bound_topdeg(const Graph& g, int k) {
  check_k(g, k, "damage_upper_bound_topdeg");
  const int n = g.order();
  std::vector<int> degs(n);
  for (int v = 0; v < n; ++v) degs[v] = g.degree(v);
  std::vector<int> sorted = degs;
  std::sort(sorted.rbegin(), sorted.rend());
  const int threshold = sorted[k - 1];
  // The maximum degree multiset takes every vertex above the threshold
  // and fills up from the threshold class; only the latter choice varies.
  std::vector<int> fixed, pool;
  for (int v = 0; v < n; ++v) {
    if (degs[v] > threshold) fixed.push_back(v);
    else if (degs[v] == threshold) pool.push_back(v);
  }
  const int need = k - static_cast<int>(fixed.size());
  std::uint64_t base = 0;
  for (int v : fixed) base |= bit(v);
  int best = INT_MAX;
  std::vector<int> pick(need);
  auto rec = [&](auto&& self, int depth, int from) -> void {
    if (depth == need) {
      std::uint64_t s = base;
      for (int v : pick) s |= bit(v);
      best = std::min(best, n - popcount(closed_neighborhood(g, s)));
      return;
    }
    for (std::size_t i = from; i + (need - depth) <= pool.size(); ++i) {
      pick[depth] = pool[i];
      self(self, depth + 1, static_cast<int>(i) + 1);
    }
  };
  rec(rec, 0, 0);
  return best;
}

std::optional<int> exists_safe_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    const std::uint64_t outside = g.all_vertices() & ~g.closed_neighborhood(v);
    bool safe = true;
    for_each_bit(outside, [&](int u) {
      if (g.neighbors(u) & outside) safe = false;
    });
    if (safe) return v;
  }
  return std::nullopt;
}

ParamBundle compute_bundle(const Graph& g) {
  ParamBundle b;
  b.g6 = canonical_form(g);
  b.n = g.order();
  b.gamma = domination_number(g);
  b.cop = cop_number(g);
  for (int k = 1; k <= b.n; ++k) {
    b.capt.push_back(capture_time(g, k));
    b.dmg.push_back(damage_number(g, k));
    b.rad.push_back(k_radius(g, k));
  }
  const auto tc = cop_throttling(g);
  b.th_c = tc.value;
  b.witness_k_thc = tc.witness_k;
  const auto td = damage_throttling(g);
  b.th_d = td.value;
  b.witness_k_thd = td.witness_k;
  return b;
}

}  // namespace cnr

#include "cnr/game.hpp"

#include <algorithm>
#include <stdexcept>

namespace cnr {

std::uint64_t support(const CopConfig& cops) {
  std::uint64_t m = 0;
  for (int c : cops) m |= bit(c);
  return m;
}

namespace {

void check_config(const Graph& g, const CopConfig& cops) {
  if (cops.empty()) throw std::invalid_argument("cop config: empty");
  int prev = -1;
  for (int c : cops) {
    if (c < 0 || c >= g.order())
      throw std::invalid_argument("cop config: vertex out of range");
    if (c < prev) throw std::invalid_argument("cop config: not sorted");
    prev = c;
  }
}

}  // namespace

std::vector<CopConfig> cop_move_successors(const Graph& g, const CopConfig& cops) {
  check_config(g, cops);
  const int k = static_cast<int>(cops.size());
  std::vector<std::vector<int>> opts(k);
  for (int i = 0; i < k; ++i) {
    for_each_bit(g.closed_neighborhood(cops[i]),
                 [&](int v) { opts[i].push_back(v); });
  }
  std::vector<CopConfig> out;
  CopConfig cur(k);
  std::vector<int> idx(k, 0);
  for (;;) {
    for (int i = 0; i < k; ++i) cur[i] = opts[i][idx[i]];
    CopConfig sorted = cur;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(std::move(sorted));
    int i = k - 1;
    while (i >= 0 && ++idx[i] == static_cast<int>(opts[i].size())) {
      idx[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t robber_move_options(const Graph& g, int robber) {
  if (robber < 0 || robber >= g.order())
    throw std::invalid_argument("robber position out of range");
  return g.closed_neighborhood(robber);
}

RoundOutcome apply_cop_move(const Graph& g, const GameState& s, const CopConfig& to) {
  if (s.phase != Phase::kCopsToMove)
    throw std::invalid_argument("apply_cop_move: not the cops' turn");
  check_config(g, to);
  if (to.size() != s.cops.size())
    throw std::invalid_argument("apply_cop_move: cop count changed");
  const auto succ = cop_move_successors(g, s.cops);
  if (!std::binary_search(succ.begin(), succ.end(), to))
    throw std::invalid_argument("apply_cop_move: illegal cop move");
  RoundOutcome out;
  if (support(to) >> s.robber & 1) {
    out.captured = true;
    return out;
  }
  out.next = s;
  out.next.cops = to;
  out.next.phase = Phase::kRobberToMove;
  if (!(s.damaged >> s.robber & 1)) {
    out.next.damaged |= bit(s.robber);
    out.damage_gained = 1;
  }
  return out;
}

RoundOutcome apply_robber_move(const Graph& g, const GameState& s, int r2) {
  if (s.phase != Phase::kRobberToMove)
    throw std::invalid_argument("apply_robber_move: not the robber's turn");
  if (!(robber_move_options(g, s.robber) >> r2 & 1))
    throw std::invalid_argument("apply_robber_move: illegal robber move");
  RoundOutcome out;
  if (support(s.cops) >> r2 & 1) {
    out.captured = true;
    return out;
  }
  out.next = s;
  out.next.robber = r2;
  out.next.phase = Phase::kCopsToMove;
  return out;
}

std::uint64_t placement_count(int n, int k) {
  // C(n+k-1, k); each intermediate is a binomial, so division is exact.
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n + k - i) / static_cast<unsigned>(i);
    if (r > ~std::uint64_t{0}) throw std::overflow_error("placement_count");
  }
  return static_cast<std::uint64_t>(r);
}

InitialPlacements::InitialPlacements(int n, int k) : n_(n), k_(k) {
  if (n < 1) throw std::invalid_argument("placements: empty graph");
  if (k < 1 || k > n) throw std::invalid_argument("placements: k out of range");
}

InitialPlacements::iterator::iterator(int n, int k, bool done)
    : n_(n), cur_(done ? 0 : k, 0), done_(done) {}

InitialPlacements::iterator& InitialPlacements::iterator::operator++() {
  int i = static_cast<int>(cur_.size()) - 1;
  while (i >= 0 && cur_[i] == n_ - 1) --i;
  if (i < 0) {
    done_ = true;
    return *this;
  }
  const int v = cur_[i] + 1;
  for (std::size_t j = i; j < cur_.size(); ++j) cur_[j] = v;
  return *this;
}

std::vector<CopConfig> InitialPlacements::all() const {
  std::vector<CopConfig> out;
  for (const auto& c : *this) out.push_back(c);
  return out;
}

}  // namespace cnr

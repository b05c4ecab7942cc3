#pragma once

#include <bit>
#include <cstdint>

namespace cnr {

// Vertex sets are stored as 64-bit masks (order is capped at 62 by the
// graph6 short form anyway).

inline int popcount(std::uint64_t m) { return std::popcount(m); }

template <typename F>
void for_each_bit(std::uint64_t m, F&& f) {
  while (m) {
    const int v = std::countr_zero(m);
    f(v);
    m &= m - 1;
  }
}

inline int lowest_bit(std::uint64_t m) { return std::countr_zero(m); }

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

}  // namespace cnr

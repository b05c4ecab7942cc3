#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cnr {

/// Natural number extended with infinity. Used for capture time and
/// k-radius, which are infinite on disconnected inputs (or when k is
/// below the cop number).
class ExtNat {
 public:
  constexpr ExtNat() : v_(0) {}
  constexpr ExtNat(std::uint64_t v) : v_(v) {}

  static constexpr ExtNat infinity() { return ExtNat(kInf, Tag{}); }

  constexpr bool is_infinite() const { return v_ == kInf; }
  constexpr bool is_finite() const { return v_ != kInf; }

  std::uint64_t value() const {
    if (is_infinite()) throw std::logic_error("ExtNat: value() on infinity");
    return v_;
  }

  ExtNat operator+(std::uint64_t d) const {
    if (is_infinite()) throw std::logic_error("ExtNat: arithmetic on infinity");
    return ExtNat(v_ + d);
  }

  friend constexpr auto operator<=>(const ExtNat&, const ExtNat&) = default;

  std::string to_string() const {
    return is_infinite() ? "inf" : std::to_string(v_);
  }

 private:
  struct Tag {};
  constexpr ExtNat(std::uint64_t v, Tag) : v_(v) {}
  // kInf sorts above every finite value.
  static constexpr std::uint64_t kInf = ~std::uint64_t{0};
  std::uint64_t v_;
};

}  // namespace cnr

#pragma once

#include <compare>
#include <cstdint>

#include "latsort/lattice.hpp"

namespace latsort {

/** A 64-bit integer extended with synthetic -inf/+inf markers. The markers
    are distinct values outside the integer range, so the bound identities
    are exact and can never collide with user data. */
class ExtendedInt {
 public:
  constexpr ExtendedInt() : ExtendedInt(std::int64_t{0}) {}
  constexpr ExtendedInt(std::int64_t v) : rank_(0), value_(v) {}

  static constexpr ExtendedInt neg_infinity() { return ExtendedInt(-1, 0); }
  static constexpr ExtendedInt pos_infinity() { return ExtendedInt(+1, 0); }

  constexpr bool is_finite() const { return rank_ == 0; }
  constexpr bool is_neg_infinity() const { return rank_ < 0; }
  constexpr bool is_pos_infinity() const { return rank_ > 0; }
  constexpr std::int64_t value() const { return value_; }  // meaningful when finite

  friend constexpr auto operator<=>(const ExtendedInt&, const ExtendedInt&) = default;

 private:
  constexpr ExtendedInt(int rank, std::int64_t v)
      : rank_(static_cast<std::int8_t>(rank)), value_(v) {}

  std::int8_t rank_;    // -1 below all finite values, +1 above; compared first
  std::int64_t value_;  // 0 unless finite
};

/** The chain of extended 64-bit integers: meet = min, join = max. Chains are
    distributive, so both sorting routes agree on this lattice. */
class TotalOrderLattice {
 public:
  using element_type = ExtendedInt;

  element_type meet(const element_type& a, const element_type& b) const { return a < b ? a : b; }
  element_type join(const element_type& a, const element_type& b) const { return a < b ? b : a; }
  bool equal(const element_type& a, const element_type& b) const { return a == b; }
  element_type bot() const { return ExtendedInt::neg_infinity(); }
  element_type top() const { return ExtendedInt::pos_infinity(); }
};

static_assert(BoundedLattice<TotalOrderLattice>);

}  // namespace latsort

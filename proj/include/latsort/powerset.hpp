#pragma once

#include <cstdint>
#include <stdexcept>

#include "latsort/lattice.hpp"

namespace latsort {

/** Subsets of a universe of at most 64 points, as bitmasks: meet = intersection,
    join = union, bot = empty set, top = full universe. Boolean, hence
    distributive by construction. */
class PowersetLattice {
 public:
  using element_type = std::uint64_t;

  explicit PowersetLattice(int universe_size) : u_(universe_size) {
    if (universe_size < 0 || universe_size > 64)
      throw std::invalid_argument("powerset universe size must be in [0, 64]");
    full_ = universe_size == 64 ? ~element_type{0}
                                : (element_type{1} << universe_size) - 1;
  }

  int universe_size() const { return u_; }
  bool contains(element_type mask) const { return (mask & ~full_) == 0; }

  element_type meet(const element_type& a, const element_type& b) const { return a & b; }
  element_type join(const element_type& a, const element_type& b) const { return a | b; }
  bool equal(const element_type& a, const element_type& b) const { return a == b; }
  element_type bot() const { return 0; }
  element_type top() const { return full_; }

 private:
  int u_;
  element_type full_;
};

static_assert(BoundedLattice<PowersetLattice>);

}  // namespace latsort

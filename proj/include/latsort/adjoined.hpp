#pragma once

#include <concepts>
#include <cstdint>
#include <utility>

#include "latsort/lattice.hpp"

namespace latsort {

/** Any lattice made bounded by adjoining a fresh ⊥ below everything and a
    fresh ⊤ above everything. Restricted to lifted elements, meet and join are
    the inner lattice's. If the inner lattice already had bounds, the fresh
    ones strictly enclose them. Owns a copy of the inner lattice. */
template <Lattice L>
  requires std::default_initializable<typename L::element_type>
class AdjoinedLattice {
 public:
  struct element_type {
    std::int8_t tag = 0;  // -1 fresh bot, 0 lifted inner value, +1 fresh top
    typename L::element_type inner{};
  };

  explicit AdjoinedLattice(L inner) : inner_(std::move(inner)) {}

  const L& inner() const { return inner_; }

  static element_type lift(typename L::element_type value) {
    return {0, std::move(value)};
  }

  element_type bot() const { return {-1, {}}; }
  element_type top() const { return {+1, {}}; }

  element_type meet(const element_type& a, const element_type& b) const {
    if (a.tag < 0 || b.tag < 0) return bot();
    if (a.tag > 0) return b;
    if (b.tag > 0) return a;
    return {0, inner_.meet(a.inner, b.inner)};
  }

  element_type join(const element_type& a, const element_type& b) const {
    if (a.tag > 0 || b.tag > 0) return top();
    if (a.tag < 0) return b;
    if (b.tag < 0) return a;
    return {0, inner_.join(a.inner, b.inner)};
  }

  bool equal(const element_type& a, const element_type& b) const {
    if (a.tag != b.tag) return false;
    return a.tag != 0 || inner_.equal(a.inner, b.inner);
  }

 private:
  L inner_;
};

/** Wraps any lattice with fresh bounds. */
template <Lattice L>
AdjoinedLattice<L> adjoin_bounds(L lat) {
  return AdjoinedLattice<L>(std::move(lat));
}

}  // namespace latsort

#pragma once

#include <gmpxx.h>

#include "latsort/lattice.hpp"

namespace latsort {

/** Nonnegative integers ordered by divisibility: meet = gcd, join = lcm,
    bot = 1 (divides everything), top = 0 (everything divides 0).
    Elements are arbitrary-precision; lcm over even modest inputs leaves
    64 bits quickly. The zero cases are spelled out rather than delegated
    to gmp conventions. */
class DivisibilityLattice {
 public:
  using element_type = mpz_class;

  element_type meet(const element_type& a, const element_type& b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    element_type g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }

  element_type join(const element_type& a, const element_type& b) const {
    if (a == 0 || b == 0) return element_type(0);
    element_type l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
  }

  bool equal(const element_type& a, const element_type& b) const {
    return mpz_cmp(a.get_mpz_t(), b.get_mpz_t()) == 0;
  }

  element_type bot() const { return element_type(1); }
  element_type top() const { return element_type(0); }

  /** a divides b, with everything dividing 0. */
  bool divides(const element_type& a, const element_type& b) const {
    if (a == 0) return b == 0;
    return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
  }
};

static_assert(BoundedLattice<DivisibilityLattice>);

}  // namespace latsort

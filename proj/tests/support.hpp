#pragma once

#include <doctest.h>

#include <random>
#include <span>
#include <vector>

#include "latsort/divisibility.hpp"
#include "latsort/finite_lattice.hpp"
#include "latsort/lattice.hpp"
#include "latsort/powerset.hpp"
#include "latsort/total_order.hpp"

namespace latsort::test {

using Rng = std::mt19937_64;

inline mpz_class random_element(const DivisibilityLattice&, Rng& rng) {
  return mpz_class(static_cast<unsigned long>(std::uniform_int_distribution<long>(1, 1000)(rng)));
}

inline ExtendedInt random_element(const TotalOrderLattice&, Rng& rng) {
  return ExtendedInt(std::uniform_int_distribution<std::int64_t>(-1000000, 1000000)(rng));
}

inline std::uint64_t random_element(const PowersetLattice& lat, Rng& rng) {
  return std::uniform_int_distribution<std::uint64_t>(0, lat.top())(rng);
}

inline int random_element(const FiniteLattice& lat, Rng& rng) {
  return std::uniform_int_distribution<int>(0, lat.size() - 1)(rng);
}

template <typename L>
std::vector<typename L::element_type> random_sequence(const L& lat, int length, Rng& rng) {
  std::vector<typename L::element_type> x;
  x.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) x.push_back(random_element(lat, rng));
  return x;
}

template <typename L>
std::span<const typename L::element_type> view(const std::vector<typename L::element_type>& x,
                                               const L&) {
  return x;
}

/** Element index for a name that must exist. */
inline int el(const FiniteLattice& lat, std::string_view name) {
  auto found = lat.find(name);
  REQUIRE(found.has_value());
  return *found;
}

/** Indices for a whitespace-free name list like "c d b". */
inline std::vector<int> els(const FiniteLattice& lat, std::initializer_list<const char*> names) {
  std::vector<int> out;
  for (const char* name : names) out.push_back(el(lat, name));
  return out;
}

template <typename L>
bool nondecreasing(const L& lat, const std::vector<typename L::element_type>& x) {
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    if (!leq(lat, x[i], x[i + 1])) return false;
  return true;
}

}  // namespace latsort::test

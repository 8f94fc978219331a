#pragma once

#include <concepts>
#include <cstdint>
#include <span>
#include <vector>

#include "latsort/lattice.hpp"
#include "latsort/sort_pascal.hpp"
#include "latsort/sort_spec.hpp"

namespace latsort {

// OpenMP counterparts of the serial kernels. Results are byte-for-byte the
// serial results: cells of a sorted sequence and cells of a grown row are
// independent given their inputs, and operation tallies are per-thread sums
// of fixed per-cell contributions, so literal counts stay exact.

/** sort_spec with the k-cells computed in parallel. */
template <Lattice L>
  requires std::default_initializable<typename L::element_type>
std::vector<typename L::element_type> sort_spec_omp(
    const L& lat, std::span<const typename L::element_type> x) {
  const int n = static_cast<int>(x.size());
  std::vector<typename L::element_type> out(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 1)
  for (int k = 1; k <= n; ++k)
    out[static_cast<std::size_t>(k) - 1] = detail::spec_cell(lat, x, k, nullptr, nullptr);
  return out;
}

/** insert_step with the new row's cells computed in parallel. The old row is
    shared read-only; small rows stay serial. */
template <BoundedLattice L>
  requires std::default_initializable<typename L::element_type>
PascalRow<L> insert_step_omp(const PascalRow<L>& row, const typename L::element_type& x,
                             OpCounter* counter = nullptr,
                             CountMode mode = CountMode::optimized) {
  const int n = row.length() + 1;
  std::vector<typename L::element_type> next(static_cast<std::size_t>(n));
  std::uint64_t joins = 0, meets = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : joins, meets) if (n >= 48)
  for (int k = 1; k <= n; ++k)
    next[static_cast<std::size_t>(k) - 1] = detail::pascal_cell(row, x, k, n, mode, joins, meets);
  if (counter) {
    counter->joins += joins;
    counter->meets += meets;
  }
  return PascalRow<L>(row.lattice(), std::move(next));
}

/** sort_pascal built on insert_step_omp. */
template <BoundedLattice L>
  requires std::default_initializable<typename L::element_type>
std::vector<typename L::element_type> sort_pascal_omp(
    const L& lat, std::span<const typename L::element_type> x,
    CountMode mode = CountMode::optimized, OpCounter* counter = nullptr) {
  PascalRow<L> row(lat);
  bool first = true;
  for (const auto& value : x) {
    if (first) {
      row = PascalRow<L>(lat, {value});
      first = false;
    } else {
      row = insert_step_omp(row, value, counter, mode);
    }
  }
  return std::move(row).take_cells();
}

}  // namespace latsort

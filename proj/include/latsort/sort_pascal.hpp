#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "latsort/errors.hpp"
#include "latsort/lattice.hpp"

namespace latsort {

/** Sentinel handling for the insertion step.

    literal:   sentinel operations (⊥ ∨ x, ⊤ ∧ y) go through the lattice and
               the counter, so step i costs exactly i joins and i meets and a
               full sort costs n(n+1) − 2 operations.
    optimized: ⊥ ∨ x → x and ⊤ ∧ y → y are rewritten away at zero cost,
               giving n(n−1) operations total. Same results either way. */
enum class CountMode { literal, optimized };

/** The sorted prefix of an insertion sort in a bounded lattice, with virtual
    sentinels: at(0) is ⊥ and at(length()+1) is ⊤. The referenced lattice must
    outlive the row. */
template <BoundedLattice L>
class PascalRow {
 public:
  using element_type = typename L::element_type;

  explicit PascalRow(const L& lat) : lat_(&lat), bot_(lat.bot()), top_(lat.top()) {}

  PascalRow(const L& lat, std::vector<element_type> cells)
      : lat_(&lat), bot_(lat.bot()), top_(lat.top()), cells_(std::move(cells)) {}

  const L& lattice() const { return *lat_; }
  int length() const { return static_cast<int>(cells_.size()); }

  /** Sentinel-aware cell access, k in [0, length()+1]. */
  const element_type& at(int k) const {
    assert(k >= 0 && k <= length() + 1);
    if (k == 0) return bot_;
    if (k == length() + 1) return top_;
    return cells_[static_cast<std::size_t>(k) - 1];
  }

  std::span<const element_type> cells() const { return cells_; }
  std::vector<element_type> take_cells() && { return std::move(cells_); }

  PascalRow appended(const element_type& x) const {
    std::vector<element_type> next(cells_.begin(), cells_.end());
    next.push_back(x);
    return PascalRow(*lat_, std::move(next));
  }

 private:
  const L* lat_;
  element_type bot_, top_;
  std::vector<element_type> cells_;
};

namespace detail {

/** One cell of the grown row: new(k) = old(k) ∧ (old(k−1) ∨ x), with old(·)
    the sentinel-aware accessor and n the new length. */
template <BoundedLattice L>
typename L::element_type pascal_cell(const PascalRow<L>& row,
                                     const typename L::element_type& x, int k, int n,
                                     CountMode mode, std::uint64_t& joins,
                                     std::uint64_t& meets) {
  const L& lat = row.lattice();
  if (mode == CountMode::optimized) {
    if (k == 1 && k == n) return x;  // ⊤ ∧ (⊥ ∨ x)
    if (k == 1) {
      ++meets;
      return lat.meet(row.at(k), x);
    }
    if (k == n) {
      ++joins;
      return lat.join(row.at(k - 1), x);
    }
  }
  ++joins;
  ++meets;
  return lat.meet(row.at(k), lat.join(row.at(k - 1), x));
}

}  // namespace detail

/** Grows the row by one element. In literal mode this records exactly
    n joins and n meets, n being the new length. */
template <BoundedLattice L>
PascalRow<L> insert_step(const PascalRow<L>& row, const typename L::element_type& x,
                         OpCounter* counter = nullptr,
                         CountMode mode = CountMode::literal) {
  const int n = row.length() + 1;
  std::vector<typename L::element_type> next;
  next.reserve(static_cast<std::size_t>(n));
  std::uint64_t joins = 0, meets = 0;
  for (int k = 1; k <= n; ++k)
    next.push_back(detail::pascal_cell(row, x, k, n, mode, joins, meets));
  if (counter) {
    counter->joins += joins;
    counter->meets += meets;
  }
  return PascalRow<L>(row.lattice(), std::move(next));
}

/** Appends an element known to dominate the prefix maximum; costs no meet or
    join and equals insert_step on the same input. Throws PreconditionViolated
    when the domination check fails. */
template <BoundedLattice L>
PascalRow<L> insert_dominating(const PascalRow<L>& row,
                               const typename L::element_type& x) {
  const int m = row.length();
  if (m > 0 && !leq(row.lattice(), row.at(m), x))
    throw PreconditionViolated(
        "insert_dominating: element does not dominate the prefix maximum");
  return row.appended(x);
}

/** Runs the insertion sort, returning the final row. Starts at the singleton
    row with no operations. With the opt-in domination fast path, every
    insertion first spends one meet on a leq check and appends for free when
    the new element dominates the current maximum — worth it only on
    nearly-sorted inputs. */
template <BoundedLattice L>
PascalRow<L> make_pascal_row(const L& lat, std::span<const typename L::element_type> x,
                             CountMode mode = CountMode::literal,
                             OpCounter* counter = nullptr,
                             bool dominating_fast_path = false) {
  PascalRow<L> row(lat);
  bool first = true;
  for (const auto& value : x) {
    if (first) {
      row = PascalRow<L>(lat, {value});
      first = false;
      continue;
    }
    if (dominating_fast_path) {
      const auto& last = row.at(row.length());
      if (lat.equal(counted_meet(lat, last, value, counter), last)) {
        row = row.appended(value);
        continue;
      }
    }
    row = insert_step(row, value, counter, mode);
  }
  return row;
}

/** Quadratic sorting in a bounded lattice via the recursive identity
    new(k) = old(k) ∧ (old(k−1) ∨ x). Equals sort_spec whenever the lattice is
    distributive; on a non-distributive lattice it still terminates and
    returns a sequence, but agreement is not guaranteed (use the analysis
    checks first when that matters). Distributivity is not verified at
    runtime. */
template <BoundedLattice L>
std::vector<typename L::element_type> sort_pascal(const L& lat,
                                                  std::span<const typename L::element_type> x,
                                                  CountMode mode = CountMode::literal,
                                                  OpCounter* counter = nullptr,
                                                  bool dominating_fast_path = false) {
  return std::move(make_pascal_row(lat, x, mode, counter, dominating_fast_path)).take_cells();
}

/** sort_pascal plus its operation tally. In literal mode the tally is exactly
    n(n+1) − 2 with joins = meets, for every n ≥ 1. */
template <BoundedLattice L>
std::pair<std::vector<typename L::element_type>, OpCounter> sort_pascal_counted(
    const L& lat, std::span<const typename L::element_type> x,
    CountMode mode = CountMode::literal) {
  OpCounter counter;
  auto sorted = sort_pascal(lat, x, mode, &counter);
  return {std::move(sorted), counter};
}

}  // namespace latsort

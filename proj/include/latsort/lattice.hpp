#pragma once

#include <concepts>
#include <cstdint>

namespace latsort {

/** A lattice instance: a value type plus meet/join/equal over it.
    Instances are immutable after construction and safe to share across
    threads; all operations are pure functions of their arguments. */
template <typename L>
concept Lattice =
    std::copyable<typename L::element_type> &&
    requires(const L& lat, const typename L::element_type& a,
             const typename L::element_type& b) {
      { lat.meet(a, b) } -> std::same_as<typename L::element_type>;
      { lat.join(a, b) } -> std::same_as<typename L::element_type>;
      { lat.equal(a, b) } -> std::same_as<bool>;
    };

/** A lattice with a least element (neutral for join) and a greatest
    element (neutral for meet). */
template <typename L>
concept BoundedLattice = Lattice<L> && requires(const L& lat) {
  { lat.bot() } -> std::same_as<typename L::element_type>;
  { lat.top() } -> std::same_as<typename L::element_type>;
};

/** a <= b iff a ∧ b = a. */
template <Lattice L>
bool leq(const L& lat, const typename L::element_type& a,
         const typename L::element_type& b) {
  return lat.equal(lat.meet(a, b), a);
}

/** Meet/join invocation tallies for one instrumented run. Each run owns its
    counter; parallel kernels accumulate per-thread tallies and add them once. */
struct OpCounter {
  std::uint64_t meets = 0;
  std::uint64_t joins = 0;

  std::uint64_t total() const { return meets + joins; }
  OpCounter& operator+=(const OpCounter& other) {
    meets += other.meets;
    joins += other.joins;
    return *this;
  }
  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

template <Lattice L>
typename L::element_type counted_meet(const L& lat, const typename L::element_type& a,
                                      const typename L::element_type& b, OpCounter* counter) {
  if (counter) ++counter->meets;
  return lat.meet(a, b);
}

template <Lattice L>
typename L::element_type counted_join(const L& lat, const typename L::element_type& a,
                                      const typename L::element_type& b, OpCounter* counter) {
  if (counter) ++counter->joins;
  return lat.join(a, b);
}

/** Elementwise equality of two sequences under the lattice's equality. */
template <Lattice L, typename Seq>
bool sequences_equal(const L& lat, const Seq& a, const Seq& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!lat.equal(a[i], b[i])) return false;
  return true;
}

}  // namespace latsort

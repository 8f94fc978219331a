#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latsort/errors.hpp"
#include "latsort/lattice.hpp"

namespace latsort {

/** An explicit finite lattice: named elements, a leq matrix, and full
    meet/join tables. Tables are stored rather than recomputed — every finite
    lattice in scope is tiny, and a table lookup keeps operation-counting
    semantics uniform with the other lattice families.

    Instances come from from_cover_relation, materialize, adjoin_bounds, or
    the canonical fixtures; those builders establish the lattice laws.
    from_tables performs only shape checks and bound derivation, so tests can
    build deliberately broken tables and feed them to verify_lattice_laws. */
class FiniteLattice {
 public:
  using element_type = int;

  /** leq, meet_table, join_table are n×n row-major (index a*n + b). Derives
      bot/top from leq; throws NoBoundsError when either is missing. Does not
      check the lattice laws. */
  static FiniteLattice from_tables(std::vector<std::string> names, std::vector<char> leq,
                                   std::vector<int> meet_table, std::vector<int> join_table);

  int size() const { return n_; }
  const std::string& name(int e) const { return names_[static_cast<std::size_t>(e)]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> find(std::string_view name) const;

  bool less_equal(int a, int b) const { return leq_[idx(a, b)] != 0; }

  element_type meet(element_type a, element_type b) const { return meet_[idx(a, b)]; }
  element_type join(element_type a, element_type b) const { return join_[idx(a, b)]; }
  bool equal(element_type a, element_type b) const { return a == b; }
  element_type bot() const { return bot_; }
  element_type top() const { return top_; }

 private:
  FiniteLattice() = default;
  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(b);
  }

  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<char> leq_;
  std::vector<int> meet_, join_;
  int bot_ = 0, top_ = 0;
};

static_assert(BoundedLattice<FiniteLattice>);

/** Builds the lattice whose order is the reflexive-transitive closure of the
    cover pairs (lower, upper). Checks, in this order: the cover graph is
    acyclic (CycleError), unique bottom/top exist (NoBoundsError), and every
    pair has a greatest lower and least upper bound (NotALatticeError naming
    the first offending pair in declaration order). Duplicate or unknown names
    are contract violations (std::invalid_argument). */
FiniteLattice from_cover_relation(const std::vector<std::string>& names,
                                  const std::vector<std::pair<std::string, std::string>>& covers);

/** The pentagon: bot a, top e, chain a < b < d < e, side element c with
    a < c < e, c incomparable to b and d. */
FiniteLattice canonical_n5();

/** The diamond: bot a, top e, atoms b, c, d pairwise incomparable; any two
    atoms meet at a and join at e. */
FiniteLattice canonical_m3();

/** Table-level bound adjunction for finite lattices; fresh names must not
    collide with existing ones. */
FiniteLattice adjoin_bounds(const FiniteLattice& lat, const std::string& bot_name = "_bot",
                            const std::string& top_name = "_top");

struct LawCheck {
  std::string law;
  bool ok = true;
  std::vector<int> witness;  // element indices; empty when ok
};

struct LawReport {
  std::vector<LawCheck> checks;
  bool all_ok() const;
  const LawCheck* first_failure() const;  // nullptr when all pass
};

/** Exhaustively checks commutativity, associativity, idempotence, absorption,
    and the bound neutrality laws over all element tuples. Failures are data
    (per-law witness tuples), not errors. */
LawReport verify_lattice_laws(const FiniteLattice& lat);

/** Builds an explicit table lattice from any bounded lattice restricted to a
    closed element list (meets and joins of listed elements must stay in the
    list, or std::invalid_argument is thrown). */
template <BoundedLattice L>
FiniteLattice materialize(const L& lat, std::span<const typename L::element_type> elements,
                          std::vector<std::string> names) {
  const int n = static_cast<int>(elements.size());
  if (names.size() != elements.size())
    throw std::invalid_argument("materialize: one name per element required");
  auto locate = [&](const typename L::element_type& value) -> int {
    for (int i = 0; i < n; ++i)
      if (lat.equal(elements[static_cast<std::size_t>(i)], value)) return i;
    throw std::invalid_argument("materialize: element list is not closed under meet/join");
  };
  std::vector<char> leq_matrix(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::vector<int> meet_table(leq_matrix.size()), join_table(leq_matrix.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const auto& ea = elements[static_cast<std::size_t>(a)];
      const auto& eb = elements[static_cast<std::size_t>(b)];
      const std::size_t at = static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                             static_cast<std::size_t>(b);
      leq_matrix[at] = leq(lat, ea, eb) ? 1 : 0;
      meet_table[at] = locate(lat.meet(ea, eb));
      join_table[at] = locate(lat.join(ea, eb));
    }
  }
  return FiniteLattice::from_tables(std::move(names), std::move(leq_matrix),
                                    std::move(meet_table), std::move(join_table));
}

}  // namespace latsort

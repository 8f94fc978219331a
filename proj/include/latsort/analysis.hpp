#pragma once

#include <optional>
#include <vector>

#include "latsort/finite_lattice.hpp"

namespace latsort {

enum class Verdict { distributive, not_distributive };

/** Triple violating a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c). */
struct LawWitness {
  int a, b, c;
};

/** Input on which the insertion path and the subset definition disagree,
    with both outputs. */
struct IdentityWitness {
  std::vector<int> input;
  std::vector<int> pascal_out;
  std::vector<int> spec_out;
};

struct DistributivityReport {
  Verdict verdict = Verdict::distributive;
  std::optional<LawWitness> law_witness;          // filled by the direct-law check
  std::optional<IdentityWitness> identity_witness;  // filled by the identity check

  bool distributive() const { return verdict == Verdict::distributive; }
};

/** Exhaustive scan of the distributive law over all ordered triples; reports
    the first violating triple in element-declaration order. Expects a lattice
    that passes verify_lattice_laws. */
DistributivityReport is_distributive_direct(const FiniteLattice& lat);

/** Compares the insertion path against the subset definition over every
    sequence of length 3 up to max_len (lexicographic order); reports the
    first mismatch. Length 3 is already decisive: a non-distributive lattice
    always yields a length-3 mismatch, and a distributive one never mismatches
    at any length. */
DistributivityReport pascal_identity_holds(const FiniteLattice& lat, int max_len = 3);

// Parallel counterparts; the enumeration is partitioned across threads and
// candidate witnesses reduce to the enumeration-order minimum, so the report
// matches the serial one exactly.
DistributivityReport is_distributive_direct_omp(const FiniteLattice& lat);
DistributivityReport pascal_identity_holds_omp(const FiniteLattice& lat, int max_len = 3);

}  // namespace latsort

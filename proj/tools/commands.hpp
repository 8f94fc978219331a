#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "latsort/divisibility.hpp"
#include "latsort/finite_lattice.hpp"
#include "latsort/powerset.hpp"
#include "latsort/total_order.hpp"

namespace latsort::cli {

// Stable exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;      // compare/check found a mismatch
inline constexpr int kExitParse = 2;         // bad token, bad selector, bad file syntax
inline constexpr int kExitValidation = 3;    // file parses but is not a valid lattice
inline constexpr int kExitDisagree = 4;      // the two distributivity checks disagree

using AnyLattice =
    std::variant<DivisibilityLattice, TotalOrderLattice, PowersetLattice, FiniteLattice>;

/** Resolves `div`, `order`, `powerset:<u>`, or `finite:<file>`. Throws
    ParseError for unknown selectors and file syntax errors, LatticeError when
    a finite lattice file fails validation. */
struct Selection {
  AnyLattice lattice;
  std::string text;
};
Selection parse_selector(const std::string& selector);

struct SortArgs {
  std::string selector;
  std::string algo = "pascal";  // "spec" or "pascal"
  std::vector<std::string> tokens;  // inline sequence; empty means use input
  std::string input;                // file path, "-" for stdin, empty for none
};
int cmd_sort(const SortArgs& args);

struct CompareArgs {
  std::string selector;
  int n = 0;
  long trials = 50;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  bool force = false;
};
int cmd_compare(const CompareArgs& args);

struct BenchArgs {
  std::string selector;
  std::string algo;  // "spec" or "pascal"
  std::vector<long> sizes;
  int reps = 3;
  std::string csv;          // empty: console only
  std::string mode = "optimized";  // "literal" or "optimized"
  bool count = false;       // record meet/join tallies
};
int cmd_bench(const BenchArgs& args);

struct CheckArgs {
  std::string file;
};
int cmd_check(const CheckArgs& args);

}  // namespace latsort::cli

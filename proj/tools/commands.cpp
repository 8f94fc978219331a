#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "latsort/analysis.hpp"
#include "latsort/lattice_file.hpp"
#include "latsort/sort_pascal.hpp"
#include "latsort/sort_spec.hpp"
#include "tokens.hpp"

namespace latsort::cli {
namespace {

mpz_class random_element(const DivisibilityLattice&, std::mt19937_64& rng) {
  return mpz_class(static_cast<unsigned long>(
      std::uniform_int_distribution<long>(1, 1000)(rng)));
}

ExtendedInt random_element(const TotalOrderLattice&, std::mt19937_64& rng) {
  return ExtendedInt(std::uniform_int_distribution<std::int64_t>(-1000, 1000)(rng));
}

std::uint64_t random_element(const PowersetLattice& lat, std::mt19937_64& rng) {
  return std::uniform_int_distribution<std::uint64_t>(0, lat.top())(rng);
}

int random_element(const FiniteLattice& lat, std::mt19937_64& rng) {
  return std::uniform_int_distribution<int>(0, lat.size() - 1)(rng);
}

// Element i of the benchmark workload (1, 2, ..., n), mapped into the lattice.
mpz_class workload_value(const DivisibilityLattice&, long i) { return mpz_class(i); }
ExtendedInt workload_value(const TotalOrderLattice&, long i) { return ExtendedInt(i); }
std::uint64_t workload_value(const PowersetLattice& lat, long i) {
  return static_cast<std::uint64_t>(i) & lat.top();
}
int workload_value(const FiniteLattice& lat, long i) {
  return static_cast<int>((i - 1) % lat.size());
}

std::vector<std::string> read_tokens(std::istream& in) {
  std::vector<std::string> tokens;
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string format_seconds(double s) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(6);
  out << s;
  return out.str();
}

}  // namespace

Selection parse_selector(const std::string& selector) {
  if (selector == "div") return {DivisibilityLattice{}, selector};
  if (selector == "order") return {TotalOrderLattice{}, selector};
  if (selector.rfind("powerset:", 0) == 0) {
    const std::string arg = selector.substr(9);
    try {
      std::size_t used = 0;
      const int u = std::stoi(arg, &used);
      if (used != arg.size() || u < 0 || u > 64) throw std::invalid_argument(arg);
      return {PowersetLattice(u), selector};
    } catch (const std::exception&) {
      throw ParseError("bad powerset universe size '" + arg + "' (expected 0..64)");
    }
  }
  if (selector.rfind("finite:", 0) == 0)
    return {load_lattice_file(selector.substr(7)), selector};
  throw ParseError("unknown lattice selector '" + selector +
                   "' (expected div, order, powerset:<u>, finite:<file>)");
}

int cmd_sort(const SortArgs& args) {
  try {
    Selection sel = parse_selector(args.selector);

    std::vector<std::string> tokens = args.tokens;
    if (!args.input.empty()) {
      if (!tokens.empty()) throw ParseError("pass a sequence inline or via --input, not both");
      if (args.input == "-") {
        tokens = read_tokens(std::cin);
      } else {
        std::ifstream in(args.input);
        if (!in) throw ParseError("cannot open sequence file '" + args.input + "'");
        tokens = read_tokens(in);
      }
    } else if (tokens.empty()) {
      tokens = read_tokens(std::cin);
    }

    if (args.algo != "spec" && args.algo != "pascal")
      throw ParseError("unknown algorithm '" + args.algo + "' (expected spec or pascal)");

    std::visit(
        [&](const auto& lat) {
          auto sequence = parse_sequence(lat, tokens);
          auto sorted = args.algo == "spec"
                            ? sort_spec(lat, std::span(std::as_const(sequence)))
                            : sort_pascal(lat, std::span(std::as_const(sequence)),
                                          CountMode::optimized);
          std::cout << format_sequence(lat, sorted) << "\n";
        },
        sel.lattice);
    return kExitOk;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const LatticeError& e) {
    std::cerr << "lattice validation error: " << e.what() << "\n";
    return kExitValidation;
  }
}

int cmd_compare(const CompareArgs& args) {
  try {
    Selection sel = parse_selector(args.selector);
    if (args.n < 0) throw ParseError("--n must be nonnegative");
    if (args.n > 20 && !args.force)
      throw ParseError("n > 20 makes the subset-definition route infeasible; pass --force to override");
    if (args.exhaustive && !std::holds_alternative<FiniteLattice>(sel.lattice))
      throw ParseError("--exhaustive requires a finite lattice");

    long matched = 0, total = 0;
    std::visit(
        [&](const auto& lat) {
          using El = typename std::decay_t<decltype(lat)>::element_type;
          auto run_one = [&](const std::vector<El>& sequence, const std::string& label) {
            auto by_pascal = sort_pascal(lat, std::span(std::as_const(sequence)),
                                         CountMode::optimized);
            auto by_spec = sort_spec(lat, std::span(std::as_const(sequence)));
            ++total;
            if (sequences_equal(lat, by_pascal, by_spec)) {
              ++matched;
              if (!args.exhaustive) std::cout << label << ": match\n";
            } else {
              std::cout << label << ": MISMATCH\n"
                        << "  input:  " << format_sequence(lat, sequence) << "\n"
                        << "  pascal: " << format_sequence(lat, by_pascal) << "\n"
                        << "  spec:   " << format_sequence(lat, by_spec) << "\n";
            }
          };

          if (args.exhaustive) {
            const auto& flat = std::get<FiniteLattice>(sel.lattice);
            long space = 1;
            for (int i = 0; i < args.n; ++i) {
              space *= flat.size();
              if (space > 10'000'000L)
                throw ParseError("exhaustive space too large (over 10^7 sequences)");
            }
            std::cout << "exhaustive: " << space << " sequences of length " << args.n << "\n";
            std::vector<El> sequence(static_cast<std::size_t>(args.n));
            for (long rank = 0; rank < space; ++rank) {
              long rest = rank;
              for (int j = args.n - 1; j >= 0; --j) {
                sequence[static_cast<std::size_t>(j)] =
                    static_cast<El>(rest % flat.size());
                rest /= flat.size();
              }
              run_one(sequence, "sequence " + std::to_string(rank + 1));
            }
          } else {
            std::cout << "prng: mt19937_64 seed=" << args.seed
                      << " (values via std::uniform_int_distribution)\n";
            std::mt19937_64 rng(args.seed);
            for (long t = 1; t <= args.trials; ++t) {
              std::vector<El> sequence;
              sequence.reserve(static_cast<std::size_t>(args.n));
              for (int i = 0; i < args.n; ++i) sequence.push_back(random_element(lat, rng));
              run_one(sequence, "trial " + std::to_string(t) + "/" +
                                    std::to_string(args.trials));
            }
          }
        },
        sel.lattice);

    std::cout << matched << "/" << total << " match\n";
    return matched == total ? kExitOk : kExitMismatch;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const LatticeError& e) {
    std::cerr << "lattice validation error: " << e.what() << "\n";
    return kExitValidation;
  }
}

int cmd_bench(const BenchArgs& args) {
  try {
    Selection sel = parse_selector(args.selector);
    if (args.algo != "spec" && args.algo != "pascal")
      throw ParseError("unknown algorithm '" + args.algo + "' (expected spec or pascal)");
    if (args.mode != "literal" && args.mode != "optimized")
      throw ParseError("unknown mode '" + args.mode + "' (expected literal or optimized)");
    if (args.sizes.empty()) throw ParseError("--sizes must list at least one length");
    if (args.reps < 1) throw ParseError("--reps must be at least 1");
    const CountMode mode =
        args.mode == "literal" ? CountMode::literal : CountMode::optimized;

    std::ofstream csv;
    if (!args.csv.empty()) {
      csv.open(args.csv);
      if (!csv) {
        std::cerr << "cannot write CSV file '" << args.csv << "'\n";
        return kExitParse;
      }
      csv << "algorithm,lattice,n,rep,wall_seconds,meets,joins,mode\n";
    }

    std::cout << "algo=" << args.algo << " lattice=" << sel.text << " mode=" << args.mode
              << " reps=" << args.reps << "\n";

    std::visit(
        [&](const auto& lat) {
          using El = typename std::decay_t<decltype(lat)>::element_type;
          for (long n : args.sizes) {
            if (n < 0) throw ParseError("sizes must be nonnegative");
            std::vector<El> workload;
            workload.reserve(static_cast<std::size_t>(n));
            for (long i = 1; i <= n; ++i) workload.push_back(workload_value(lat, i));

            std::vector<double> times;
            times.reserve(static_cast<std::size_t>(args.reps));
            for (int rep = 1; rep <= args.reps; ++rep) {
              OpCounter counter;
              OpCounter* counter_ptr = args.count ? &counter : nullptr;
              // Timed region covers only the sort call, not input construction.
              const auto start = std::chrono::steady_clock::now();
              auto sorted = args.algo == "spec"
                                ? sort_spec(lat, std::span(std::as_const(workload)),
                                            counter_ptr)
                                : sort_pascal(lat, std::span(std::as_const(workload)), mode,
                                              counter_ptr);
              const double elapsed = seconds_since(start);
              times.push_back(elapsed);
              if (sorted.size() != workload.size())
                throw std::logic_error("sort returned a sequence of the wrong length");
              if (csv.is_open()) {
                csv << args.algo << "," << csv_field(sel.text) << "," << n << "," << rep
                    << "," << format_seconds(elapsed) << ",";
                if (args.count) csv << counter.meets;
                csv << ",";
                if (args.count) csv << counter.joins;
                csv << "," << args.mode << "\n";
              }
            }
            std::sort(times.begin(), times.end());
            const double median = times[times.size() / 2];
            std::cout << "n=" << n << " median=" << format_seconds(median) << "s\n";
          }
        },
        sel.lattice);

    if (csv.is_open()) {
      csv.flush();
      if (!csv) {
        std::cerr << "error while writing CSV file '" << args.csv << "'\n";
        return kExitParse;
      }
      std::cout << "csv: " << args.csv << "\n";
    }
    return kExitOk;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const LatticeError& e) {
    std::cerr << "lattice validation error: " << e.what() << "\n";
    return kExitValidation;
  }
}

namespace {

std::string verdict_text(const DistributivityReport& report) {
  return report.distributive() ? "distributive" : "not distributive";
}

void print_law_witness(const FiniteLattice& lat, const LawWitness& w) {
  const int lhs = lat.meet(w.a, lat.join(w.b, w.c));
  const int rhs = lat.join(lat.meet(w.a, w.b), lat.meet(w.a, w.c));
  std::cout << "  witness: (a,b,c) = (" << lat.name(w.a) << "," << lat.name(w.b) << ","
            << lat.name(w.c) << "): a∧(b∨c) = " << lat.name(lhs)
            << " but (a∧b)∨(a∧c) = " << lat.name(rhs) << "\n";
}

void print_identity_witness(const FiniteLattice& lat, const IdentityWitness& w) {
  std::cout << "  witness input:  " << format_sequence(lat, w.input) << "\n"
            << "  pascal output:  " << format_sequence(lat, w.pascal_out) << "\n"
            << "  spec output:    " << format_sequence(lat, w.spec_out) << "\n";
}

}  // namespace

int cmd_check(const CheckArgs& args) {
  std::optional<FiniteLattice> loaded;
  try {
    loaded.emplace(load_lattice_file(args.file));
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const LatticeError& e) {
    std::cerr << "lattice validation error: " << e.what() << "\n";
    return kExitValidation;
  }
  const FiniteLattice& lat = *loaded;

  const auto laws = verify_lattice_laws(lat);
  if (!laws.all_ok()) {
    const auto* failure = laws.first_failure();
    std::cerr << "lattice validation error: law '" << failure->law << "' fails\n";
    return kExitValidation;
  }

  std::cout << "lattice: " << args.file << " (" << lat.size() << " elements)\n";

  const auto direct = is_distributive_direct(lat);
  std::cout << "direct-law check:     " << verdict_text(direct) << "\n";
  if (direct.law_witness) print_law_witness(lat, *direct.law_witness);

  const auto identity = pascal_identity_holds(lat);
  std::cout << "pascal-identity check: " << verdict_text(identity) << "\n";
  if (identity.identity_witness) print_identity_witness(lat, *identity.identity_witness);

  if (direct.verdict != identity.verdict) {
    std::cout << "checks DISAGREE\n";
    return kExitDisagree;
  }
  std::cout << "checks AGREE: " << verdict_text(direct) << "\n";
  return direct.distributive() ? kExitOk : kExitMismatch;
}

}  // namespace latsort::cli

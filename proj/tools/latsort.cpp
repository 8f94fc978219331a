// latsort: sorting sequences in bounded lattices, comparing the quadratic
// insertion path against the subset-definition reference, checking the
// distributivity of finite lattices, and benchmarking both sort routes.

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"sorting in bounded lattices"};
  app.require_subcommand(1);

  latsort::cli::SortArgs sort_args;
  auto* sort_cmd = app.add_subcommand("sort", "sort a sequence in a lattice");
  sort_cmd->add_option("--lattice", sort_args.selector,
                       "div | order | powerset:<u> | finite:<file>")
      ->required();
  sort_cmd->add_option("--algo", sort_args.algo, "spec | pascal")
      ->default_val("pascal");
  sort_cmd->add_option("--input", sort_args.input,
                       "sequence file of whitespace-separated tokens, '-' for stdin");
  sort_cmd->add_option("tokens", sort_args.tokens, "inline sequence tokens");

  latsort::cli::CompareArgs compare_args;
  auto* compare_cmd =
      app.add_subcommand("compare", "run both sort routes on random sequences");
  compare_cmd->add_option("--lattice", compare_args.selector,
                          "div | order | powerset:<u> | finite:<file>")
      ->required();
  compare_cmd->add_option("--n", compare_args.n, "sequence length")->required();
  compare_cmd->add_option("--trials", compare_args.trials, "number of random sequences")
      ->default_val(50);
  compare_cmd->add_option("--seed", compare_args.seed, "prng seed")->default_val(0);
  compare_cmd->add_flag("--exhaustive", compare_args.exhaustive,
                        "enumerate every length-n sequence (finite lattices only)");
  compare_cmd->add_flag("--force", compare_args.force, "allow n > 20");

  latsort::cli::BenchArgs bench_args;
  auto* bench_cmd =
      app.add_subcommand("bench", "time sorting (1,...,n), optionally writing CSV");
  bench_cmd->add_option("--algo", bench_args.algo, "spec | pascal")->required();
  bench_cmd->add_option("--lattice", bench_args.selector,
                        "div | order | powerset:<u> | finite:<file>")
      ->required();
  bench_cmd->add_option("--sizes", bench_args.sizes, "comma-separated sequence lengths")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--reps", bench_args.reps, "repetitions per size")->default_val(3);
  bench_cmd->add_option("--csv", bench_args.csv, "CSV output path");
  bench_cmd->add_option("--mode", bench_args.mode,
                        "literal | optimized sentinel handling (pascal only)")
      ->default_val("optimized");
  bench_cmd->add_flag("--count", bench_args.count, "record meet/join tallies");

  latsort::cli::CheckArgs check_args;
  auto* check_cmd =
      app.add_subcommand("check", "decide distributivity of a finite lattice file");
  check_cmd->add_option("file", check_args.file, "lattice file")->required();

  CLI11_PARSE(app, argc, argv);

  if (sort_cmd->parsed()) return latsort::cli::cmd_sort(sort_args);
  if (compare_cmd->parsed()) return latsort::cli::cmd_compare(compare_args);
  if (bench_cmd->parsed()) return latsort::cli::cmd_bench(bench_args);
  if (check_cmd->parsed()) return latsort::cli::cmd_check(check_args);
  return 0;
}

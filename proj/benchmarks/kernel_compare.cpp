// Compares the serial reference kernels against their OpenMP counterparts on
// fixed workloads and verifies the outputs are identical. --quick shrinks the
// workloads for use as a smoke test.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "latsort/analysis.hpp"
#include "latsort/divisibility.hpp"
#include "latsort/finite_lattice.hpp"
#include "latsort/parallel.hpp"
#include "latsort/powerset.hpp"
#include "latsort/sort_pascal.hpp"
#include "latsort/sort_spec.hpp"
#include "latsort/total_order.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool all_ok = true;

template <typename SerialFn, typename ParallelFn, typename EqualFn>
void report(const std::string& name, long n, SerialFn&& serial, ParallelFn&& parallel,
            EqualFn&& equal) {
  auto t0 = Clock::now();
  auto serial_result = serial();
  const double serial_s = seconds(t0);

  t0 = Clock::now();
  auto parallel_result = parallel();
  const double parallel_s = seconds(t0);

  const bool ok = equal(serial_result, parallel_result);
  all_ok = all_ok && ok;
  std::printf("%-26s n=%-7ld serial=%9.4fs  omp=%9.4fs  speedup=%5.2fx  %s\n", name.c_str(),
              n, serial_s, parallel_s, parallel_s > 0 ? serial_s / parallel_s : 0.0,
              ok ? "match" : "MISMATCH");
}

template <typename L>
std::vector<typename L::element_type> iota_workload(const L&, long n);

template <>
std::vector<mpz_class> iota_workload(const latsort::DivisibilityLattice&, long n) {
  std::vector<mpz_class> x;
  x.reserve(static_cast<std::size_t>(n));
  for (long i = 1; i <= n; ++i) x.emplace_back(i);
  return x;
}

template <>
std::vector<latsort::ExtendedInt> iota_workload(const latsort::TotalOrderLattice&, long n) {
  std::vector<latsort::ExtendedInt> x;
  x.reserve(static_cast<std::size_t>(n));
  for (long i = 1; i <= n; ++i) x.emplace_back((i * 2654435761L) % 1000003L);  // scrambled
  return x;
}

template <>
std::vector<std::uint64_t> iota_workload(const latsort::PowersetLattice& lat, long n) {
  std::vector<std::uint64_t> x;
  x.reserve(static_cast<std::size_t>(n));
  for (long i = 1; i <= n; ++i) x.push_back(static_cast<std::uint64_t>(i) & lat.top());
  return x;
}

template <typename L>
void bench_pascal(const std::string& name, const L& lat, long n) {
  auto x = iota_workload(lat, n);
  std::span<const typename L::element_type> view(x);
  report(
      name, n, [&] { return latsort::sort_pascal(lat, view, latsort::CountMode::optimized); },
      [&] { return latsort::sort_pascal_omp(lat, view); },
      [&](const auto& a, const auto& b) { return latsort::sequences_equal(lat, a, b); });
}

template <typename L>
void bench_spec(const std::string& name, const L& lat, long n) {
  auto x = iota_workload(lat, n);
  std::span<const typename L::element_type> view(x);
  report(
      name, n, [&] { return latsort::sort_spec(lat, view); },
      [&] { return latsort::sort_spec_omp(lat, view); },
      [&](const auto& a, const auto& b) { return latsort::sequences_equal(lat, a, b); });
}

void bench_analysis(const std::string& name, const latsort::FiniteLattice& lat) {
  report(
      name, lat.size(), [&] { return latsort::pascal_identity_holds(lat); },
      [&] { return latsort::pascal_identity_holds_omp(lat); },
      [&](const auto& a, const auto& b) {
        return a.verdict == b.verdict &&
               (!a.identity_witness || a.identity_witness->input == b.identity_witness->input);
      });
}

latsort::FiniteLattice powerset_as_finite(int u) {
  latsort::PowersetLattice lat(u);
  std::vector<std::uint64_t> elements;
  std::vector<std::string> names;
  for (std::uint64_t m = 0; m <= lat.top(); ++m) {
    elements.push_back(m);
    names.push_back("m" + std::to_string(m));
  }
  return latsort::materialize(lat, std::span<const std::uint64_t>(elements), names);
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  std::printf("omp max threads: %d\n", omp_get_max_threads());

  latsort::DivisibilityLattice div;
  latsort::TotalOrderLattice order;
  latsort::PowersetLattice masks(16);

  if (quick) {
    bench_pascal("pascal/div", div, 400);
    bench_pascal("pascal/order", order, 2000);
    bench_spec("spec/div", div, 12);
    bench_spec("spec/powerset:16", masks, 12);
    bench_analysis("identity-check/bool4", powerset_as_finite(4));
  } else {
    bench_pascal("pascal/div", div, 2000);
    bench_pascal("pascal/div", div, 6000);
    bench_pascal("pascal/order", order, 20000);
    bench_spec("spec/div", div, 18);
    bench_spec("spec/div", div, 21);
    bench_spec("spec/powerset:16", masks, 20);
    bench_analysis("identity-check/bool5", powerset_as_finite(5));
    bench_analysis("identity-check/bool6", powerset_as_finite(6));
  }

  if (!all_ok) {
    std::printf("serial and parallel kernels disagreed\n");
    return 1;
  }
  return 0;
}

#include "latsort/analysis.hpp"

#include <cstdint>
#include <stdexcept>

#include "latsort/sort_pascal.hpp"
#include "latsort/sort_spec.hpp"

namespace latsort {
namespace {

bool law_holds(const FiniteLattice& lat, int a, int b, int c) {
  return lat.meet(a, lat.join(b, c)) == lat.join(lat.meet(a, b), lat.meet(a, c));
}

DistributivityReport law_report(const FiniteLattice& lat, std::int64_t rank) {
  DistributivityReport report;
  if (rank < 0) return report;
  const auto n = static_cast<std::int64_t>(lat.size());
  const int a = static_cast<int>(rank / (n * n));
  const int b = static_cast<int>(rank / n % n);
  const int c = static_cast<int>(rank % n);
  report.verdict = Verdict::not_distributive;
  report.law_witness = LawWitness{a, b, c};
  return report;
}

std::vector<int> decode_sequence(std::int64_t rank, int n, int len) {
  std::vector<int> seq(static_cast<std::size_t>(len));
  for (int j = len - 1; j >= 0; --j) {
    seq[static_cast<std::size_t>(j)] = static_cast<int>(rank % n);
    rank /= n;
  }
  return seq;
}

/** True when the two routes disagree on seq; fills the outputs if asked. */
bool routes_disagree(const FiniteLattice& lat, const std::vector<int>& seq,
                     std::vector<int>* pascal_out, std::vector<int>* spec_out) {
  auto by_pascal = sort_pascal(lat, std::span<const int>(seq));
  auto by_spec = sort_spec(lat, std::span<const int>(seq));
  const bool differ = by_pascal != by_spec;
  if (differ) {
    if (pascal_out) *pascal_out = std::move(by_pascal);
    if (spec_out) *spec_out = std::move(by_spec);
  }
  return differ;
}

DistributivityReport identity_report(const FiniteLattice& lat, int len, std::int64_t rank) {
  DistributivityReport report;
  if (rank < 0) return report;
  IdentityWitness witness;
  witness.input = decode_sequence(rank, lat.size(), len);
  routes_disagree(lat, witness.input, &witness.pascal_out, &witness.spec_out);
  report.verdict = Verdict::not_distributive;
  report.identity_witness = std::move(witness);
  return report;
}

}  // namespace

DistributivityReport is_distributive_direct(const FiniteLattice& lat) {
  const int n = lat.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (!law_holds(lat, a, b, c))
          return law_report(lat, (static_cast<std::int64_t>(a) * n + b) * n + c);
  return {};
}

DistributivityReport is_distributive_direct_omp(const FiniteLattice& lat) {
  const auto n = static_cast<std::int64_t>(lat.size());
  const std::int64_t total = n * n * n;
  std::int64_t first = total;
#pragma omp parallel for schedule(static) reduction(min : first)
  for (std::int64_t rank = 0; rank < total; ++rank) {
    if (rank >= first) continue;
    const int a = static_cast<int>(rank / (n * n));
    const int b = static_cast<int>(rank / n % n);
    const int c = static_cast<int>(rank % n);
    if (!law_holds(lat, a, b, c)) first = rank;
  }
  return law_report(lat, first == total ? -1 : first);
}

DistributivityReport pascal_identity_holds(const FiniteLattice& lat, int max_len) {
  if (max_len < 3) throw std::invalid_argument("pascal_identity_holds: max_len must be >= 3");
  const auto n = static_cast<std::int64_t>(lat.size());
  for (int len = 3; len <= max_len; ++len) {
    std::int64_t total = 1;
    for (int i = 0; i < len; ++i) total *= n;
    for (std::int64_t rank = 0; rank < total; ++rank) {
      auto seq = decode_sequence(rank, lat.size(), len);
      if (routes_disagree(lat, seq, nullptr, nullptr)) return identity_report(lat, len, rank);
    }
  }
  return {};
}

DistributivityReport pascal_identity_holds_omp(const FiniteLattice& lat, int max_len) {
  if (max_len < 3) throw std::invalid_argument("pascal_identity_holds: max_len must be >= 3");
  const auto n = static_cast<std::int64_t>(lat.size());
  for (int len = 3; len <= max_len; ++len) {
    std::int64_t total = 1;
    for (int i = 0; i < len; ++i) total *= n;
    std::int64_t first = total;
#pragma omp parallel for schedule(static) reduction(min : first)
    for (std::int64_t rank = 0; rank < total; ++rank) {
      if (rank >= first) continue;
      auto seq = decode_sequence(rank, lat.size(), len);
      if (routes_disagree(lat, seq, nullptr, nullptr)) first = rank;
    }
    if (first != total) return identity_report(lat, len, first);
  }
  return {};
}

}  // namespace latsort

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latsort/divisibility.hpp"
#include "latsort/errors.hpp"
#include "latsort/finite_lattice.hpp"
#include "latsort/powerset.hpp"
#include "latsort/total_order.hpp"

namespace latsort::cli {

// Per-lattice token syntax:
//   div       decimal naturals of any size        42 0 123456789012345678901
//   order     decimal 64-bit integers, -inf, +inf  -3 17 +inf
//   powerset  hex masks, optional 0x prefix        0x1f 3A
//   finite    declared element names               a c2 60

std::optional<mpz_class> parse_token(const DivisibilityLattice&, const std::string& token);
std::optional<ExtendedInt> parse_token(const TotalOrderLattice&, const std::string& token);
std::optional<std::uint64_t> parse_token(const PowersetLattice& lat, const std::string& token);
std::optional<int> parse_token(const FiniteLattice& lat, const std::string& token);

std::string print_element(const DivisibilityLattice&, const mpz_class& value);
std::string print_element(const TotalOrderLattice&, const ExtendedInt& value);
std::string print_element(const PowersetLattice&, std::uint64_t value);
std::string print_element(const FiniteLattice& lat, int value);

/** Parses every token or throws ParseError naming the first offending one. */
template <typename L>
std::vector<typename L::element_type> parse_sequence(const L& lat,
                                                     const std::vector<std::string>& tokens) {
  std::vector<typename L::element_type> values;
  values.reserve(tokens.size());
  for (const auto& token : tokens) {
    auto value = parse_token(lat, token);
    if (!value) throw ParseError("bad token '" + token + "' for the selected lattice");
    values.push_back(std::move(*value));
  }
  return values;
}

template <typename L, typename Seq>
std::string format_sequence(const L& lat, const Seq& values) {
  std::string out;
  for (const auto& value : values) {
    if (!out.empty()) out += ' ';
    out += print_element(lat, value);
  }
  return out;
}

}  // namespace latsort::cli

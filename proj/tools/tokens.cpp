#include "tokens.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace latsort::cli {
namespace {

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

}  // namespace

std::optional<mpz_class> parse_token(const DivisibilityLattice&, const std::string& token) {
  if (!all_digits(token)) return std::nullopt;
  return mpz_class(token, 10);
}

std::optional<ExtendedInt> parse_token(const TotalOrderLattice&, const std::string& token) {
  if (token == "-inf") return ExtendedInt::neg_infinity();
  if (token == "+inf") return ExtendedInt::pos_infinity();
  std::int64_t value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  if (!token.empty() && token.front() == '+') ++begin;  // from_chars rejects '+'
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || begin == end) return std::nullopt;
  return ExtendedInt(value);
}

std::optional<std::uint64_t> parse_token(const PowersetLattice& lat, const std::string& token) {
  std::string_view digits = token;
  if (digits.size() > 2 && (digits.substr(0, 2) == "0x" || digits.substr(0, 2) == "0X"))
    digits.remove_prefix(2);
  if (digits.empty()) return std::nullopt;
  std::uint64_t mask = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), mask, 16);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
  if (!lat.contains(mask)) return std::nullopt;
  return mask;
}

std::optional<int> parse_token(const FiniteLattice& lat, const std::string& token) {
  return lat.find(token);
}

std::string print_element(const DivisibilityLattice&, const mpz_class& value) {
  return value.get_str();
}

std::string print_element(const TotalOrderLattice&, const ExtendedInt& value) {
  if (value.is_neg_infinity()) return "-inf";
  if (value.is_pos_infinity()) return "+inf";
  return std::to_string(value.value());
}

std::string print_element(const PowersetLattice&, std::uint64_t value) {
  char buffer[20];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value, 16);
  return "0x" + std::string(buffer, ptr);
}

std::string print_element(const FiniteLattice& lat, int value) {
  return lat.name(value);
}

}  // namespace latsort::cli

#include <doctest.h>

#include <algorithm>

#include "latsort/divisibility.hpp"
#include "latsort/finite_lattice.hpp"
#include "latsort/powerset.hpp"
#include "latsort/sort_spec.hpp"
#include "latsort/total_order.hpp"
#include "support.hpp"

using namespace latsort;
using latsort::test::els;

namespace {

template <typename L>
void check_spec_properties(const L& lat, int rounds, std::uint64_t seed) {
  test::Rng rng(seed);
  for (int i = 0; i < rounds; ++i) {
    const int n = std::uniform_int_distribution<int>(0, 9)(rng);
    auto x = test::random_sequence(lat, n, rng);
    auto sorted = sort_spec(lat, test::view(x, lat));
    REQUIRE(sorted.size() == x.size());

    CHECK(test::nondecreasing(lat, sorted));
    CHECK(sequences_equal(lat, sort_spec(lat, test::view(sorted, lat)), sorted));  // idempotent

    auto shuffled = x;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(sequences_equal(lat, sort_spec(lat, test::view(shuffled, lat)), sorted));

    if (n > 0) {
      auto big_meet = x[0], big_join = x[0];
      for (int j = 1; j < n; ++j) {
        big_meet = lat.meet(big_meet, x[static_cast<std::size_t>(j)]);
        big_join = lat.join(big_join, x[static_cast<std::size_t>(j)]);
      }
      CHECK(lat.equal(sorted.front(), big_meet));
      CHECK(lat.equal(sorted.back(), big_join));
    }
    if (n == 3) {
      auto closed = sort3(lat, x[0], x[1], x[2]);
      for (int j = 0; j < 3; ++j)
        CHECK(lat.equal(closed[static_cast<std::size_t>(j)], sorted[static_cast<std::size_t>(j)]));
    }
  }
}

}  // namespace

TEST_SUITE("sort-spec") {

TEST_CASE("divisibility example (2,3,4) -> (1,2,12)") {
  DivisibilityLattice lat;
  std::vector<mpz_class> x = {2, 3, 4};
  auto sorted = sort_spec(lat, test::view(x, lat));
  REQUIRE(sorted.size() == 3);
  CHECK(sorted[0] == 1);
  CHECK(sorted[1] == 2);  // gcd(lcm(2,3), lcm(2,4), lcm(3,4)) = gcd(6,4,12)
  CHECK(sorted[2] == 12);
}

TEST_CASE("pentagon evaluations") {
  auto n5 = canonical_n5();
  CHECK(sort_spec(n5, std::span<const int>(els(n5, {"c", "d", "b"}))) == els(n5, {"a", "d", "e"}));
  CHECK(sort_spec(n5, std::span<const int>(els(n5, {"c", "d"}))) == els(n5, {"a", "e"}));
}

TEST_CASE("diamond evaluations") {
  auto m3 = canonical_m3();
  CHECK(sort_spec(m3, std::span<const int>(els(m3, {"b", "c", "d"}))) == els(m3, {"a", "e", "e"}));
  CHECK(sort_spec(m3, std::span<const int>(els(m3, {"b", "c"}))) == els(m3, {"a", "e"}));
}

TEST_CASE("empty input gives empty output") {
  DivisibilityLattice lat;
  CHECK(sort_spec(lat, std::span<const mpz_class>{}).empty());
}

TEST_CASE("instrumentation counts every subset") {
  DivisibilityLattice lat;
  std::vector<mpz_class> x;
  for (int i = 1; i <= 10; ++i) x.emplace_back(i);
  OpCounter counter;
  std::uint64_t subsets = 0;
  sort_spec(lat, test::view(x, lat), &counter, &subsets);
  CHECK(subsets == 1023);
  // joins: sum over k of (k-1)·C(10,k); meets: sum over k of C(10,k)-1
  std::uint64_t joins = 0, meets = 0;
  for (int k = 1; k <= 10; ++k) {
    joins += static_cast<std::uint64_t>(k - 1) * binomial(10, k);
    meets += binomial(10, k) - 1;
  }
  CHECK(counter.joins == joins);
  CHECK(counter.meets == meets);
}

TEST_CASE("sort3 closed form") {
  DivisibilityLattice div;
  auto r = sort3(div, mpz_class(2), mpz_class(3), mpz_class(4));
  CHECK(r[0] == 1);
  CHECK(r[1] == 2);
  CHECK(r[2] == 12);

  auto m3 = canonical_m3();
  auto s = sort3(m3, els(m3, {"b"})[0], els(m3, {"c"})[0], els(m3, {"d"})[0]);
  CHECK(s[0] == els(m3, {"a"})[0]);
  CHECK(s[1] == els(m3, {"e"})[0]);
  CHECK(s[2] == els(m3, {"e"})[0]);

  auto v = sort3(div, mpz_class(6), mpz_class(6), mpz_class(6));
  CHECK(v[0] == 6);
  CHECK(v[1] == 6);
  CHECK(v[2] == 6);
}

TEST_CASE("sort3 equals sort_spec exhaustively on finite lattices") {
  for (const auto& lat : {canonical_n5(), canonical_m3()}) {
    for (int a = 0; a < lat.size(); ++a)
      for (int b = 0; b < lat.size(); ++b)
        for (int c = 0; c < lat.size(); ++c) {
          std::vector<int> x = {a, b, c};
          auto direct = sort_spec(lat, std::span<const int>(x));
          auto closed = sort3(lat, a, b, c);
          REQUIRE(direct.size() == 3);
          CHECK(direct[0] == closed[0]);
          CHECK(direct[1] == closed[1]);
          CHECK(direct[2] == closed[2]);
        }
  }
}

TEST_CASE("total-order agreement with a comparison sort") {
  TotalOrderLattice lat;
  test::Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    const int n = std::uniform_int_distribution<int>(0, 9)(rng);
    auto x = test::random_sequence(lat, n, rng);
    auto expected = x;
    std::sort(expected.begin(), expected.end());
    CHECK(sequences_equal(lat, sort_spec(lat, test::view(x, lat)), expected));
  }
}

TEST_CASE("sampled properties per lattice family") {
  check_spec_properties(DivisibilityLattice{}, 60, 31);
  check_spec_properties(TotalOrderLattice{}, 60, 37);
  check_spec_properties(PowersetLattice{16}, 60, 41);
}

}  // TEST_SUITE

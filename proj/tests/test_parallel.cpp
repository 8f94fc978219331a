#include <doctest.h>

#include "latsort/analysis.hpp"
#include "latsort/parallel.hpp"
#include "support.hpp"

using namespace latsort;

TEST_SUITE("parallel") {

TEST_CASE("sort_spec_omp equals the serial reference") {
  DivisibilityLattice div;
  TotalOrderLattice order;
  PowersetLattice masks(16);
  auto n5 = canonical_n5();
  test::Rng rng(43);
  for (int round = 0; round < 30; ++round) {
    const int n = std::uniform_int_distribution<int>(0, 12)(rng);
    auto a = test::random_sequence(div, n, rng);
    CHECK(sequences_equal(div, sort_spec_omp(div, test::view(a, div)),
                          sort_spec(div, test::view(a, div))));
    auto b = test::random_sequence(order, n, rng);
    CHECK(sequences_equal(order, sort_spec_omp(order, test::view(b, order)),
                          sort_spec(order, test::view(b, order))));
    auto c = test::random_sequence(masks, n, rng);
    CHECK(sequences_equal(masks, sort_spec_omp(masks, test::view(c, masks)),
                          sort_spec(masks, test::view(c, masks))));
    auto d = test::random_sequence(n5, std::min(n, 8), rng);
    CHECK(sort_spec_omp(n5, std::span<const int>(d)) == sort_spec(n5, std::span<const int>(d)));
  }
}

TEST_CASE("sort_pascal_omp equals the serial reference, including literal counts") {
  DivisibilityLattice div;
  TotalOrderLattice order;
  test::Rng rng(47);
  for (int round = 0; round < 20; ++round) {
    const int n = std::uniform_int_distribution<int>(0, 80)(rng);
    auto x = test::random_sequence(div, n, rng);
    OpCounter serial_counter, parallel_counter;
    auto serial = sort_pascal(div, test::view(x, div), CountMode::literal, &serial_counter);
    auto parallel = sort_pascal_omp(div, test::view(x, div), CountMode::literal,
                                    &parallel_counter);
    CHECK(sequences_equal(div, serial, parallel));
    CHECK(serial_counter == parallel_counter);

    auto y = test::random_sequence(order, n, rng);
    CHECK(sequences_equal(order,
                          sort_pascal(order, test::view(y, order), CountMode::optimized),
                          sort_pascal_omp(order, test::view(y, order))));
  }
}

TEST_CASE("sort_pascal_omp on a row long enough to actually go parallel") {
  DivisibilityLattice div;
  std::vector<mpz_class> x;
  for (int i = 1; i <= 300; ++i) x.emplace_back(i);
  auto serial = sort_pascal(div, test::view(x, div), CountMode::optimized);
  auto parallel = sort_pascal_omp(div, test::view(x, div));
  CHECK(sequences_equal(div, serial, parallel));
}

TEST_CASE("insert_step_omp matches insert_step cell by cell") {
  DivisibilityLattice div;
  test::Rng rng(53);
  for (int round = 0; round < 10; ++round) {
    auto x = test::random_sequence(div, 60, rng);
    auto row = make_pascal_row(div, test::view(x, div));
    auto next_value = test::random_element(div, rng);
    OpCounter serial_counter, parallel_counter;
    auto serial = insert_step(row, next_value, &serial_counter, CountMode::literal);
    auto parallel = insert_step_omp(row, next_value, &parallel_counter, CountMode::literal);
    REQUIRE(serial.length() == parallel.length());
    for (int k = 0; k <= serial.length() + 1; ++k) CHECK(serial.at(k) == parallel.at(k));
    CHECK(serial_counter == parallel_counter);
  }
}

TEST_CASE("parallel analysis returns the same verdict and witness") {
  std::vector<FiniteLattice> corpus;
  corpus.push_back(canonical_n5());
  corpus.push_back(canonical_m3());
  corpus.push_back(adjoin_bounds(canonical_n5()));
  corpus.push_back(from_cover_relation({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}}));

  for (const auto& lat : corpus) {
    auto direct_serial = is_distributive_direct(lat);
    auto direct_parallel = is_distributive_direct_omp(lat);
    CHECK(direct_serial.verdict == direct_parallel.verdict);
    REQUIRE(direct_serial.law_witness.has_value() == direct_parallel.law_witness.has_value());
    if (direct_serial.law_witness) {
      CHECK(direct_serial.law_witness->a == direct_parallel.law_witness->a);
      CHECK(direct_serial.law_witness->b == direct_parallel.law_witness->b);
      CHECK(direct_serial.law_witness->c == direct_parallel.law_witness->c);
    }

    auto identity_serial = pascal_identity_holds(lat);
    auto identity_parallel = pascal_identity_holds_omp(lat);
    CHECK(identity_serial.verdict == identity_parallel.verdict);
    REQUIRE(identity_serial.identity_witness.has_value() ==
            identity_parallel.identity_witness.has_value());
    if (identity_serial.identity_witness)
      CHECK(identity_serial.identity_witness->input == identity_parallel.identity_witness->input);
  }
}

}  // TEST_SUITE

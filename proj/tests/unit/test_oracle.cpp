#include "doctest.h"

#include <random>

#include "covfix/oracle.hpp"
#include "support/tiny.hpp"

using namespace covfix;

TEST_CASE("exact optimum on the hand-traced instances") {
  auto r1 = oracle::exact_optimum(testing::t1());
  CHECK(r1.value == 1.0);
  CHECK(r1.cover == std::vector<int>{1});  // column 2 covers both rows

  auto r2 = oracle::exact_optimum(testing::t2());
  CHECK(r2.value == 3.0);
}

TEST_CASE("exact optimum rejects oversized inputs") {
  std::vector<double> cost(21, 1.0);
  std::vector<std::vector<int>> rows = {{0}};
  try {
    oracle::exact_optimum(ScpInstance::validate(1, 21, std::move(cost), std::move(rows)));
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}

TEST_CASE("lp optimum equals the integral optimum when the relaxation is tight") {
  CHECK(oracle::lp_optimum(testing::t1()) == doctest::Approx(1.0));
}

TEST_CASE("lp optimum can be fractional") {
  // Odd-cycle covering: rows {1,2}, {2,3}, {3,1}, unit costs. LP picks 1/2
  // everywhere for value 1.5; the integral optimum is 2.
  ScpInstance inst = ScpInstance::validate(3, 3, {1.0, 1.0, 1.0}, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(oracle::lp_optimum(inst) == doctest::Approx(1.5));
  CHECK(oracle::exact_optimum(inst).value == 2.0);
}

TEST_CASE("lp optimum never exceeds the exact optimum") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    ScpInstance inst = testing::random_tiny(rng, 5, 7);
    const double lp = oracle::lp_optimum(inst);
    const double ip = oracle::exact_optimum(inst).value;
    CHECK(lp <= ip + 1e-9);
  }
}

TEST_CASE("fix validity distinguishes forced and forbidden columns") {
  ScpInstance inst = testing::t1();
  const double ub = 1.0;
  // Column 2 (index 1) is in every optimal cover; columns 1 and 3 in none.
  CHECK(oracle::fix_validity(inst, 0, 0, ub));
  CHECK(oracle::fix_validity(inst, 1, 1, ub));
  CHECK(oracle::fix_validity(inst, 2, 0, ub));
  CHECK_FALSE(oracle::fix_validity(inst, 1, 0, ub));
  CHECK_FALSE(oracle::fix_validity(inst, 0, 1, ub));
}

TEST_CASE("fix validity rejects an invalid bound") {
  try {
    oracle::fix_validity(testing::t1(), 0, 0, 0.5);  // optimum is 1
    FAIL("expected InvalidBound");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidBound);
  }
}

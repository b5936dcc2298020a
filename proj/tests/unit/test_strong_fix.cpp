#include "doctest.h"

#include <random>

#include "covfix/oracle.hpp"
#include "covfix/strong_fix.hpp"
#include "support/tiny.hpp"

using namespace covfix;

TEST_CASE("subproblem values on the first hand instance") {
  ScpInstance inst = testing::t1();
  CHECK(sf_oracle_value(inst, 0) == doctest::Approx(2.0));
  CHECK(sf_oracle_value(inst, 1) == doctest::Approx(1.0));
  CHECK(sf_oracle_value(inst, 2) == doctest::Approx(4.0));
}

TEST_CASE("strong fixing on the first hand instance with ub 1") {
  ScpInstance inst = testing::t1();
  SfReport report = strong_fix(inst, 1.0, SolverConfig{});
  CHECK(report.fix_set.to_zero == std::set<int>{0, 2});
  for (const auto& rec : report.per_column) {
    if (rec.col == 1) CHECK_FALSE(rec.exceeded);
  }
}

TEST_CASE("reported subproblem values match the enumeration oracle") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    ScpInstance inst = testing::random_tiny(rng, 8, 8);
    const double ub = oracle::exact_optimum(inst).value;
    SfReport report = strong_fix(inst, ub, SolverConfig{}, /*cross_certificates=*/false);
    for (const auto& rec : report.per_column) {
      CHECK(rec.value == doctest::Approx(sf_oracle_value(inst, rec.col)).epsilon(1e-6));
    }
  }
}

TEST_CASE("cross certificates change the work, never the fix set") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 100; ++trial) {
    ScpInstance inst = testing::random_tiny(rng);
    const double ub = oracle::exact_optimum(inst).value + 1.0;
    SfReport with = strong_fix(inst, ub, SolverConfig{}, true);
    SfReport without = strong_fix(inst, ub, SolverConfig{}, false);
    CHECK(with.fix_set.to_zero == without.fix_set.to_zero);
    CHECK(with.lp_solves <= without.lp_solves);
    CHECK(without.skipped.empty());
  }
}

TEST_CASE("parallel mode reproduces the sequential fix set") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 30; ++trial) {
    ScpInstance inst = testing::random_tiny(rng);
    const double ub = oracle::exact_optimum(inst).value;
    SfReport seq = strong_fix(inst, ub, SolverConfig{}, true, 1);
    SfReport par = strong_fix(inst, ub, SolverConfig{}, true, 3);
    CHECK(seq.fix_set.to_zero == par.fix_set.to_zero);
  }
}

TEST_CASE("every strong fix is oracle-valid at the exact optimum") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 100; ++trial) {
    ScpInstance inst = testing::random_tiny(rng, 8, 8);
    const double ub = oracle::exact_optimum(inst).value;
    SfReport report = strong_fix(inst, ub, SolverConfig{});
    for (int j : report.fix_set.to_zero) {
      CHECK(oracle::fix_validity(inst, j, 0, ub));
    }
  }
}

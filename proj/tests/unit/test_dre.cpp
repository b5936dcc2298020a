#include "doctest.h"

#include <random>

#include "covfix/dre.hpp"
#include "covfix/oracle.hpp"
#include "support/tiny.hpp"

using namespace covfix;

TEST_CASE("superset-support rows are dominated") {
  ScpInstance inst = testing::t2();  // rows {1}, {1,2}, {2,3}
  CHECK(dominated_rows(inst) == std::vector<int>{1});
}

TEST_CASE("identical supports keep the lowest index") {
  ScpInstance inst = ScpInstance::validate(3, 2, {1.0, 1.0}, {{0, 1}, {0, 1}, {0}});
  // Rows 1 and 2 are identical; both are also supersets of row 3.
  CHECK(dominated_rows(inst) == std::vector<int>{0, 1});

  ScpInstance twins = ScpInstance::validate(2, 2, {1.0, 1.0}, {{0, 1}, {0, 1}});
  CHECK(dominated_rows(twins) == std::vector<int>{1});
}

TEST_CASE("singleton rows force their column once") {
  ScpInstance inst = ScpInstance::validate(3, 3, {1.0, 1.0, 1.0}, {{0}, {0}, {1, 2}});
  auto forced = singleton_rows(inst);
  REQUIRE(forced.size() == 1);
  CHECK(forced[0] == std::pair<int, int>{0, 0});
}

TEST_CASE("fixpoint on the second hand instance") {
  ReducedInstance red = dre_fixpoint(testing::t2());
  CHECK(red.fixed_to_one == std::vector<int>{1});
  CHECK(red.cost_offset == 2.0);
  CHECK(red.instance.n_rows == 1);
  CHECK(red.row_map == std::vector<int>{3});
  // Column 1 is gone (fixed); columns 2 and 3 survive.
  CHECK(red.col_map == std::vector<int>{2, 3});
}

TEST_CASE("fixpoint is idempotent") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    ScpInstance inst = testing::random_tiny(rng);
    ReducedInstance once = dre_fixpoint(inst);
    ReducedInstance again = dre_fixpoint(once.instance);
    CHECK(again.fixed_to_one.empty());
    CHECK(again.instance.n_rows == once.instance.n_rows);
    CHECK(again.instance.n_cols == once.instance.n_cols);
  }
}

TEST_CASE("fixpoint output has no dominated or singleton rows") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    ReducedInstance red = dre_fixpoint(testing::random_tiny(rng));
    CHECK(dominated_rows(red.instance).empty());
    CHECK(singleton_rows(red.instance).empty());
  }
}

TEST_CASE("fixpoint preserves the exact optimum") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    ScpInstance inst = testing::random_tiny(rng);
    const double before = oracle::exact_optimum(inst).value;
    ReducedInstance red = dre_fixpoint(inst);
    double after = red.cost_offset;
    if (red.instance.n_rows > 0) after += oracle::exact_optimum(red.instance).value;
    CHECK(before == doctest::Approx(after));
  }
}

TEST_CASE("dre fixes to one are valid against the oracle") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    ScpInstance inst = testing::random_tiny(rng);
    ReducedInstance red = dre_fixpoint(inst);
    const double ub = oracle::exact_optimum(inst).value;
    for (int id : red.fixed_to_one) {
      CHECK(oracle::fix_validity(inst, id - 1, 1, ub));
    }
  }
}

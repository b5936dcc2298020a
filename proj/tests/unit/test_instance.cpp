#include "doctest.h"

#include <random>

#include "covfix/instance.hpp"
#include "support/tiny.hpp"

using namespace covfix;

TEST_CASE("validate builds transpose-consistent incidence") {
  ScpInstance inst = testing::t1();
  CHECK(inst.n_rows == 2);
  CHECK(inst.n_cols == 3);
  CHECK(inst.rows[0] == std::vector<int>{0, 1});
  CHECK(inst.cols[1] == std::vector<int>{0, 1});
  CHECK(inst.cols[2] == std::vector<int>{1});
  CHECK(inst.integral_costs);
  CHECK(inst.covers(0, 1));
  CHECK_FALSE(inst.covers(0, 2));
}

TEST_CASE("validate rejects bad raw data") {
  try {
    ScpInstance::validate(1, 2, {1.0, 1.0}, {{}});
    FAIL("expected EmptyRow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyRow);
  }
  try {
    ScpInstance::validate(1, 2, {1.0, 0.0}, {{0}});
    FAIL("expected NonPositiveCost");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPositiveCost);
  }
  try {
    ScpInstance::validate(1, 2, {1.0, 1.0}, {{0, 2}});
    FAIL("expected IndexOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexOutOfRange);
  }
  try {
    ScpInstance::validate(1, 2, {1.0, 1.0}, {{0, 0}});
    FAIL("expected DuplicateIndex");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateIndex);
  }
}

TEST_CASE("non-integer costs clear the integral flag") {
  ScpInstance inst = ScpInstance::validate(1, 1, {1.5}, {{0}});
  CHECK_FALSE(inst.integral_costs);
}

TEST_CASE("restrict drops columns and translates IDs") {
  ScpInstance inst = testing::t1();
  ReducedInstance red = restrict_instance(inst, {2}, {}, {});
  CHECK(red.instance.n_cols == 2);
  CHECK(red.instance.n_rows == 2);
  CHECK(red.col_map == std::vector<int>{1, 2});
  CHECK(red.fixed_to_zero == std::vector<int>{3});
  CHECK(red.cost_offset == 0.0);
  CHECK(red.instance.rows[1] == std::vector<int>{1});
}

TEST_CASE("fixing a column to one removes its rows and pays its cost") {
  ScpInstance inst = testing::t1();
  ReducedInstance red = restrict_instance(inst, {}, {1}, {});
  CHECK(red.instance.n_rows == 0);
  CHECK(red.instance.n_cols == 2);
  CHECK(red.fixed_to_one == std::vector<int>{2});
  CHECK(red.cost_offset == 1.0);
}

TEST_CASE("restrict detects infeasible reductions") {
  ScpInstance inst = testing::t1();
  try {
    restrict_instance(inst, {0, 1}, {}, {});  // row 1 loses both columns
    FAIL("expected InfeasibleReduction");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InfeasibleReduction);
  }
}

TEST_CASE("restrict rejects a column fixed both ways") {
  ScpInstance inst = testing::t1();
  try {
    restrict_instance(inst, {1}, {1}, {});
    FAIL("expected DuplicateIndex");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateIndex);
  }
}

TEST_CASE("compose chains two reductions into one") {
  ScpInstance inst = testing::t2();
  // First drop column 3, then fix column 1 (new index 0) to one.
  ReducedInstance outer = restrict_instance(inst, {2}, {}, {});
  ReducedInstance inner = restrict_instance(outer.instance, {}, {0}, {});
  ReducedInstance total = compose(outer, inner);
  CHECK(total.fixed_to_zero == std::vector<int>{3});
  CHECK(total.fixed_to_one == std::vector<int>{1});
  CHECK(total.cost_offset == 2.0);
  CHECK(total.instance.n_rows == 1);  // only row 3 survives... minus col 3
  CHECK(total.row_map == std::vector<int>{3});
  CHECK(total.col_map == std::vector<int>{2});
}

TEST_CASE("compose equals direct restriction on random instances") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    ScpInstance inst = testing::random_tiny(rng);
    if (inst.n_cols < 2) continue;
    // Pick a column whose removal keeps every row covered.
    int victim = -1;
    for (int j = 0; j < inst.n_cols; ++j) {
      bool safe = true;
      for (int i : inst.cols[j]) {
        if (inst.rows[i].size() == 1) {
          safe = false;
          break;
        }
      }
      if (safe) {
        victim = j;
        break;
      }
    }
    if (victim < 0) continue;
    ReducedInstance outer = restrict_instance(inst, {victim}, {}, {});
    ReducedInstance inner = identity_reduction(outer.instance);
    ReducedInstance total = compose(outer, inner);
    CHECK(total.col_map == outer.col_map);
    CHECK(total.row_map == outer.row_map);
    CHECK(total.fixed_to_zero == outer.fixed_to_zero);
    CHECK(total.instance.n_cols == outer.instance.n_cols);
  }
}

TEST_CASE("identity reduction is a left and right unit for compose") {
  ScpInstance inst = testing::t2();
  ReducedInstance red = restrict_instance(inst, {2}, {}, {});
  ReducedInstance left = compose(identity_reduction(inst), red);
  CHECK(left.col_map == red.col_map);
  CHECK(left.fixed_to_zero == red.fixed_to_zero);
  CHECK(left.cost_offset == red.cost_offset);
}

#include "doctest.h"

#include <random>

#include "covfix/fixing.hpp"
#include "covfix/oracle.hpp"
#include "support/tiny.hpp"

using namespace covfix;

namespace {

DualIterate iterate_at(const ScpInstance& inst, std::vector<double> u, long index = 0) {
  DualIterate it;
  it.iter_index = index;
  it.zeta = 0.0;
  for (double v : u) it.zeta += v;
  it.reduced_costs.resize(inst.n_cols);
  for (int j = 0; j < inst.n_cols; ++j) {
    double acc = 0.0;
    for (int i : inst.cols[j]) acc += u[i];
    it.reduced_costs[j] = inst.cost[j] - acc;
  }
  it.u = std::move(u);
  return it;
}

}  // namespace

TEST_CASE("fix rule at a suboptimal dual point of the first hand instance") {
  ScpInstance inst = testing::t1();
  DualIterate it = iterate_at(inst, {0.0, 1.0});
  FixSet fixes = fix_from_dual(inst, it, 1.0, FixSet{});
  CHECK(fixes.to_zero == std::set<int>{0, 2});
  CHECK(fixes.to_one.empty());
  CHECK(fixes.provenance.at(0).strategy == Strategy::Rcf);
}

TEST_CASE("no fixing when the gap absorbs every reduced cost") {
  ScpInstance inst = testing::t1();
  DualIterate it = iterate_at(inst, {0.0, 0.0});
  FixSet fixes = fix_from_dual(inst, it, 10.0, FixSet{});
  CHECK(fixes.size() == 0);
}

TEST_CASE("fixing is monotone in the upper bound") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    ScpInstance inst = testing::random_tiny(rng);
    SolveResult res = solve(inst, SolverConfig{});
    if (res.status != SolveStatus::Optimal) continue;
    const double opt = oracle::exact_optimum(inst).value;
    FixSet tight = rcf(inst, res, opt);
    FixSet loose = rcf(inst, res, opt + 2.0);
    for (int j : loose.to_zero) CHECK(tight.to_zero.count(j) == 1);
  }
}

TEST_CASE("borderline reduced costs are left free") {
  // gap == wbar exactly: the strictness guard must not fix.
  ScpInstance inst = testing::t1();
  DualIterate it = iterate_at(inst, {1.0, 0.0});  // optimal, wbar = (0, 0, 3)
  FixSet fixes = fix_from_dual(inst, it, 4.0, FixSet{});  // gap = 3 = wbar_3
  CHECK(fixes.to_zero.empty());
}

TEST_CASE("invalid bounds below the dual objective are rejected") {
  ScpInstance inst = testing::t1();
  DualIterate it = iterate_at(inst, {1.0, 0.0});
  try {
    fix_from_dual(inst, it, 0.5, FixSet{});
    FAIL("expected InvalidBound");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidBound);
  }
}

TEST_CASE("rcf refuses a capped solve") {
  ScpInstance inst = testing::t1();
  SolveResult res;
  res.status = SolveStatus::IterationLimit;
  try {
    rcf(inst, res, 10.0);
    FAIL("expected NotOptimal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotOptimal);
  }
}

TEST_CASE("dual-path accumulation contains the final-iterate fixes") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    ScpInstance inst = testing::random_tiny(rng);
    const double ub = oracle::exact_optimum(inst).value;
    DpfListener listener(inst, ub);
    SolveResult res = solve(inst, SolverConfig{}, std::ref(listener));
    if (res.status != SolveStatus::Optimal) continue;
    FixSet last_only = rcf(inst, res, ub);
    for (int j : last_only.to_zero) CHECK(listener.fixes().to_zero.count(j) == 1);
    // The trace is one row per iterate with nondecreasing cumulative counts.
    long prev = 0;
    for (const auto& row : listener.trace()) {
      CHECK(row.cum_fixed >= prev);
      prev = row.cum_fixed;
    }
    CHECK(prev == static_cast<long>(listener.fixes().to_zero.size()));
  }
}

TEST_CASE("provenance records the first fixing iterate") {
  ScpInstance inst = testing::t1();
  FixSet acc;
  acc = fix_from_dual(inst, iterate_at(inst, {0.0, 1.0}, 4), 1.0, std::move(acc), Strategy::Dpf);
  acc = fix_from_dual(inst, iterate_at(inst, {1.0, 0.0}, 9), 1.0, std::move(acc), Strategy::Dpf);
  CHECK(acc.provenance.at(0).iterate_index == 4);
  CHECK(acc.provenance.at(2).iterate_index == 4);
}

TEST_CASE("conflicting verdicts on one column are rejected") {
  FixSet fixes;
  fixes.add_zero(3, Strategy::Rcf, 0);
  try {
    fixes.add_one(3, Strategy::Dre, 1);
    FAIL("expected DuplicateIndex");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateIndex);
  }
}

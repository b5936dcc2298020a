#include "doctest.h"

#include <random>

#include "covfix/greedy.hpp"
#include "covfix/oracle.hpp"
#include "support/tiny.hpp"

using namespace covfix;

TEST_CASE("greedy picks the best cost-per-row ratio") {
  GreedyResult res = greedy_ub(testing::t1());
  CHECK(res.value == 1.0);
  CHECK(res.cover == std::vector<int>{1});  // ratio 1/2 beats 1/1 and 3/1
}

TEST_CASE("greedy on the second hand instance") {
  GreedyResult res = greedy_ub(testing::t2());
  CHECK(res.value == 3.0);
  CHECK(res.cover == std::vector<int>{1, 0});  // col 2 first, then col 1 forced
}

TEST_CASE("two disjoint rows need two unit columns") {
  ScpInstance inst = ScpInstance::validate(2, 2, {1.0, 1.0}, {{0}, {1}});
  CHECK(greedy_ub(inst).value == 2.0);
}

TEST_CASE("greedy value is always a valid upper bound") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 200; ++trial) {
    ScpInstance inst = testing::random_tiny(rng);
    GreedyResult res = greedy_ub(inst);
    CHECK(res.value >= oracle::exact_optimum(inst).value - 1e-9);
    // And the cover really covers.
    std::vector<char> hit(inst.n_rows, 0);
    for (int j : res.cover) {
      for (int i : inst.cols[j]) hit[i] = 1;
    }
    for (char h : hit) CHECK(h == 1);
  }
}

#pragma once

// Deterministic random tiny-instance factory for property tests. Every
// instance is feasible by construction (each row gets at least one column).

#include <random>
#include <vector>

#include "covfix/instance.hpp"

namespace covfix::testing {

inline ScpInstance random_tiny(std::mt19937_64& rng, int max_m = 8, int max_n = 12,
                               int max_cost = 10) {
  std::uniform_int_distribution<int> m_dist(1, max_m);
  std::uniform_int_distribution<int> n_dist(1, max_n);
  const int m = m_dist(rng);
  const int n = n_dist(rng);
  std::uniform_int_distribution<int> cost_dist(1, max_cost);
  std::vector<double> cost(n);
  for (auto& c : cost) c = cost_dist(rng);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> col_dist(0, n - 1);
  std::vector<std::vector<int>> rows(m);
  for (auto& row : rows) {
    for (int j = 0; j < n; ++j) {
      if (coin(rng) < 0.35) row.push_back(j);
    }
    if (row.empty()) row.push_back(col_dist(rng));
  }
  return ScpInstance::validate(m, n, std::move(cost), std::move(rows));
}

// The two hand-traced reference instances used across the test suite.
//
// T1: rows {1,2}, {2,3} (1-based columns), costs (1, 1, 3).
inline ScpInstance t1() {
  return ScpInstance::validate(2, 3, {1.0, 1.0, 3.0}, {{0, 1}, {1, 2}});
}

// T2: rows {1}, {1,2}, {2,3}, costs (2, 1, 1).
inline ScpInstance t2() {
  return ScpInstance::validate(3, 3, {2.0, 1.0, 1.0}, {{0}, {0, 1}, {1, 2}});
}

}  // namespace covfix::testing

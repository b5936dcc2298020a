#pragma once

#include <vector>

#include "covfix/instance.hpp"

namespace covfix {

struct GreedyResult {
  double value = 0.0;
  std::vector<int> cover;  // 0-based chosen columns, in pick order
};

/// Chvatal-style greedy cover: repeatedly take the column with the best cost
/// per newly covered row, lowest index on ties. Always feasible, so its value
/// is a valid upper bound.
GreedyResult greedy_ub(const ScpInstance& inst);

}  // namespace covfix

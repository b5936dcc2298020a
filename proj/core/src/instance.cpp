#include "covfix/instance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace covfix {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyRow: return "EmptyRow";
    case ErrorCode::NonPositiveCost: return "NonPositiveCost";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DuplicateIndex: return "DuplicateIndex";
    case ErrorCode::InfeasibleReduction: return "InfeasibleReduction";
    case ErrorCode::Truncated: return "Truncated";
    case ErrorCode::TrailingGarbage: return "TrailingGarbage";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::NonPositiveUb: return "NonPositiveUb";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::NumericalBreakdown: return "NumericalBreakdown";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::InvalidBound: return "InvalidBound";
    case ErrorCode::NotOptimal: return "NotOptimal";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::MissingUb: return "MissingUb";
  }
  return "UnknownError";
}

ScpInstance ScpInstance::validate(int n_rows, int n_cols, std::vector<double> cost,
                                  std::vector<std::vector<int>> rows) {
  if (n_rows < 0 || n_cols < 0 || static_cast<int>(cost.size()) != n_cols ||
      static_cast<int>(rows.size()) != n_rows) {
    throw Error(ErrorCode::IndexOutOfRange, "dimension mismatch in raw instance data");
  }
  bool integral = true;
  for (int j = 0; j < n_cols; ++j) {
    if (!(cost[j] > 0.0)) {
      throw Error(ErrorCode::NonPositiveCost,
                  "cost of column " + std::to_string(j + 1) + " is " + std::to_string(cost[j]));
    }
    if (cost[j] != std::floor(cost[j])) integral = false;
  }
  ScpInstance inst;
  inst.n_rows = n_rows;
  inst.n_cols = n_cols;
  inst.cost = std::move(cost);
  inst.integral_costs = integral;
  inst.cols.assign(n_cols, {});
  for (int i = 0; i < n_rows; ++i) {
    auto& row = rows[i];
    if (row.empty()) {
      throw Error(ErrorCode::EmptyRow, "row " + std::to_string(i + 1) + " has no covering column");
    }
    std::sort(row.begin(), row.end());
    int prev = -1;
    for (int j : row) {
      if (j < 0 || j >= n_cols) {
        throw Error(ErrorCode::IndexOutOfRange, "row " + std::to_string(i + 1) +
                                                    " references column " + std::to_string(j + 1));
      }
      if (j == prev) {
        throw Error(ErrorCode::DuplicateIndex, "row " + std::to_string(i + 1) +
                                                   " lists column " + std::to_string(j + 1) +
                                                   " twice");
      }
      prev = j;
      inst.cols[j].push_back(i);
    }
  }
  inst.rows = std::move(rows);
  return inst;
}

bool ScpInstance::covers(int row, int col) const {
  const auto& r = rows[row];
  return std::binary_search(r.begin(), r.end(), col);
}

ReducedInstance restrict_instance(const ScpInstance& inst,
                                  const std::vector<int>& drop_cols_to_zero,
                                  const std::vector<int>& fix_cols_to_one,
                                  const std::vector<int>& drop_rows) {
  std::vector<char> col_dropped(inst.n_cols, 0);   // dropped for any reason
  std::vector<char> row_dropped(inst.n_rows, 0);
  ReducedInstance red;

  for (int j : drop_cols_to_zero) {
    if (j < 0 || j >= inst.n_cols) throw Error(ErrorCode::IndexOutOfRange, "drop_cols_to_zero");
    col_dropped[j] = 1;
    red.fixed_to_zero.push_back(j + 1);
  }
  for (int j : fix_cols_to_one) {
    if (j < 0 || j >= inst.n_cols) throw Error(ErrorCode::IndexOutOfRange, "fix_cols_to_one");
    if (col_dropped[j]) throw Error(ErrorCode::DuplicateIndex, "column fixed to both 0 and 1");
    col_dropped[j] = 1;
    red.fixed_to_one.push_back(j + 1);
    red.cost_offset += inst.cost[j];
    for (int i : inst.cols[j]) row_dropped[i] = 1;  // covered rows are satisfied
  }
  for (int i : drop_rows) {
    if (i < 0 || i >= inst.n_rows) throw Error(ErrorCode::IndexOutOfRange, "drop_rows");
    row_dropped[i] = 1;
  }
  std::sort(red.fixed_to_zero.begin(), red.fixed_to_zero.end());
  std::sort(red.fixed_to_one.begin(), red.fixed_to_one.end());

  std::vector<int> new_col_of(inst.n_cols, -1);
  std::vector<double> new_cost;
  for (int j = 0; j < inst.n_cols; ++j) {
    if (col_dropped[j]) continue;
    new_col_of[j] = static_cast<int>(red.col_map.size());
    red.col_map.push_back(j + 1);
    new_cost.push_back(inst.cost[j]);
  }
  std::vector<std::vector<int>> new_rows;
  for (int i = 0; i < inst.n_rows; ++i) {
    if (row_dropped[i]) continue;
    std::vector<int> support;
    for (int j : inst.rows[i]) {
      if (new_col_of[j] >= 0) support.push_back(new_col_of[j]);
    }
    if (support.empty()) {
      throw Error(ErrorCode::InfeasibleReduction,
                  "row " + std::to_string(i + 1) + " lost every covering column");
    }
    red.row_map.push_back(i + 1);
    new_rows.push_back(std::move(support));
  }
  const int new_m = static_cast<int>(new_rows.size());
  const int new_n = static_cast<int>(new_cost.size());
  red.instance = ScpInstance::validate(new_m, new_n, std::move(new_cost), std::move(new_rows));
  return red;
}

ReducedInstance identity_reduction(const ScpInstance& inst) {
  ReducedInstance red;
  red.instance = inst;
  red.col_map.resize(inst.n_cols);
  for (int j = 0; j < inst.n_cols; ++j) red.col_map[j] = j + 1;
  red.row_map.resize(inst.n_rows);
  for (int i = 0; i < inst.n_rows; ++i) red.row_map[i] = i + 1;
  return red;
}

ReducedInstance compose(const ReducedInstance& outer, const ReducedInstance& inner) {
  ReducedInstance red;
  red.instance = inner.instance;
  red.cost_offset = outer.cost_offset + inner.cost_offset;
  for (int id : inner.col_map) red.col_map.push_back(outer.col_map[id - 1]);
  for (int id : inner.row_map) red.row_map.push_back(outer.row_map[id - 1]);
  red.fixed_to_zero = outer.fixed_to_zero;
  for (int id : inner.fixed_to_zero) red.fixed_to_zero.push_back(outer.col_map[id - 1]);
  red.fixed_to_one = outer.fixed_to_one;
  for (int id : inner.fixed_to_one) red.fixed_to_one.push_back(outer.col_map[id - 1]);
  std::sort(red.fixed_to_zero.begin(), red.fixed_to_zero.end());
  std::sort(red.fixed_to_one.begin(), red.fixed_to_one.end());
  return red;
}

}  // namespace covfix

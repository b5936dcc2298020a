#pragma once

#include <vector>

#include "covfix/errors.hpp"

namespace covfix {

/// A validated 0/1 set-covering instance: minimize cost of a column subset
/// such that every row has at least one chosen covering column.
///
/// The incidence matrix is kept in both orientations: `rows[i]` lists the
/// columns covering row i, `cols[j]` the rows covered by column j. Both lists
/// are sorted, duplicate-free, and transpose-consistent. All indices are
/// 0-based in memory; file formats and reports use 1-based IDs.
struct ScpInstance {
  int n_rows = 0;
  int n_cols = 0;
  std::vector<double> cost;
  std::vector<std::vector<int>> rows;
  std::vector<std::vector<int>> cols;
  /// True when every cost is an exact integer (the common benchmark case),
  /// which keeps the floor-based fixing rule exact.
  bool integral_costs = false;

  /// Builds an instance from raw data, checking every invariant.
  /// Throws Error{EmptyRow, NonPositiveCost, IndexOutOfRange, DuplicateIndex}.
  static ScpInstance validate(int n_rows, int n_cols, std::vector<double> cost,
                              std::vector<std::vector<int>> rows);

  bool covers(int row, int col) const;
};

/// A sub-instance produced by fixing columns and removing rows, together with
/// the bookkeeping needed to map results back to the instance it was derived
/// from. Maps and fixed sets store original 1-based IDs.
struct ReducedInstance {
  ScpInstance instance;
  std::vector<int> col_map;  // new col -> original 1-based column ID
  std::vector<int> row_map;  // new row -> original 1-based row ID
  std::vector<int> fixed_to_one;   // original 1-based IDs, sorted
  std::vector<int> fixed_to_zero;  // original 1-based IDs, sorted
  double cost_offset = 0.0;        // sum of original costs over fixed_to_one
};

/// Removes `drop_cols_to_zero` and `fix_cols_to_one` from the instance,
/// drops `drop_rows` plus every row covered by a column fixed to one, and
/// accumulates the fixed cost. Inputs are 0-based indices into `inst`.
///
/// A surviving row that loses all of its columns signals an invalid upper
/// bound or a fixing bug; that raises Error{InfeasibleReduction}.
ReducedInstance restrict_instance(const ScpInstance& inst,
                                  const std::vector<int>& drop_cols_to_zero,
                                  const std::vector<int>& fix_cols_to_one,
                                  const std::vector<int>& drop_rows);

/// The reduction that keeps everything (identity maps, no fixes).
ReducedInstance identity_reduction(const ScpInstance& inst);

/// Chains two reductions: `outer` reduces X to Y, `inner` reduces Y to Z;
/// the result reduces X to Z with all IDs expressed in X terms.
ReducedInstance compose(const ReducedInstance& outer, const ReducedInstance& inner);

}  // namespace covfix

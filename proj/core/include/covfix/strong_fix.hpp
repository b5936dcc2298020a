#pragma once

#include <vector>

#include "covfix/fixing.hpp"
#include "covfix/instance.hpp"
#include "covfix/simplex.hpp"

namespace covfix {

struct SfReport {
  FixSet fix_set;
  struct ColumnRecord {
    int col;        // 0-based
    double value;   // w_j plus the subproblem optimum
    bool exceeded;  // value > ub (at tolerance), i.e. the column was fixed
  };
  std::vector<ColumnRecord> per_column;  // one entry per attempted column
  long lp_solves = 0;
  std::vector<int> skipped;  // columns already fixed before their turn
};

/// Strong fixing: for each free column j in ascending order, maximize
/// w_j + u'(e - A_{.j}) over the dual region and fix j to zero when the
/// optimum strictly exceeds ub. Sequential mode warm-starts each subproblem
/// from the previous optimal basis (the feasible region never changes).
///
/// With cross_certificates on, each subproblem's optimal dual point is also
/// run through the reduced-cost rule against all still-free columns, so later
/// subproblems can be skipped. The resulting fix set is the same either way;
/// only the amount of work differs.
///
/// jobs > 1 solves the subproblems concurrently from cold starts and merges
/// results in column order, then applies cross certificates in a second
/// deterministic pass.
SfReport strong_fix(const ScpInstance& inst, double ub, const SolverConfig& cfg,
                    bool cross_certificates = true, int jobs = 1);

/// Independent check value for strong fixing on desk-scale instances: the
/// optimum of the covering relaxation with column j forced in, computed by
/// brute-force enumeration (n <= 8). Equals the strong-fixing subproblem
/// value by LP duality.
double sf_oracle_value(const ScpInstance& inst, int j);

}  // namespace covfix

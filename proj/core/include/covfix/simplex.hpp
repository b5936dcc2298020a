#pragma once

#include <functional>
#include <vector>

#include "covfix/instance.hpp"

namespace covfix {

/// One dual-feasible point for max{u'e : u'A <= w', u >= 0}, as streamed by
/// the solver. `reduced_costs` holds w_j - u'A_{.j} for every column, i.e. the
/// slacks of the dual constraints, which equal the reduced costs of the
/// primal relaxation. Iterates are snapshots; listeners may retain them.
struct DualIterate {
  long iter_index = 0;
  std::vector<double> u;
  double zeta = 0.0;
  std::vector<double> reduced_costs;
};

enum class Pricing { Dantzig, Bland };

struct SolverConfig {
  double eps_feas = 1e-7;
  double eps_opt = 1e-9;
  double eps_pivot = 1e-10;
  Pricing pricing = Pricing::Dantzig;
  /// Consecutive degenerate pivots after which Bland's rule is forced for the
  /// rest of the solve; -1 means max(50, 10 * m).
  int anti_cycling = -1;
  long max_iters = 500000;
  int refactor_interval = 100;
};

/// The basis of the dual region in compact form: which u components are basic
/// and which dual constraints are tight. Valid for warm-starting any solve
/// over the same instance (the feasible region does not depend on the
/// objective).
struct Basis {
  std::vector<int> basic_rows;  // rows i with u_i basic (columns of the working basis)
  std::vector<int> tight_cols;  // columns j with u'A_{.j} = w_j
};

enum class SolveStatus { Optimal, IterationLimit };

struct SolveResult {
  SolveStatus status = SolveStatus::Optimal;
  DualIterate final;
  long iterations = 0;  // pivot count
  Basis basis;
};

using IterateListener = std::function<void(const DualIterate&)>;

/// Primal simplex on the dual of the covering relaxation, started from the
/// all-slack basis (u = 0). The listener fires once per simplex iteration,
/// iteration 0 and the final iterate included; every emitted point is
/// dual-feasible and the objective is nondecreasing along the stream.
SolveResult solve(const ScpInstance& inst, const SolverConfig& cfg,
                  const IterateListener& listener = {});

/// Same machinery with an arbitrary objective over u (used for the per-column
/// strong-fixing subproblems, objective e - A_{.j}). An optional warm basis
/// from a previous solve over the same instance skips the slack start.
/// For generic objectives `zeta` in emitted iterates is the objective value.
SolveResult solve_with_objective(const ScpInstance& inst, const std::vector<double>& objective,
                                 const SolverConfig& cfg, const Basis* warm = nullptr,
                                 const IterateListener& listener = {});

}  // namespace covfix

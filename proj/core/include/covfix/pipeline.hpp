#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "covfix/fixing.hpp"
#include "covfix/instance.hpp"
#include "covfix/orlib.hpp"
#include "covfix/simplex.hpp"

namespace covfix {

/// The five evaluated reduction procedures. The iterative variants repeat
/// solve / fix / eliminate on the shrinking instance until a pass fixes
/// nothing, with the upper bound lowered by the accumulated fixed cost.
enum class Procedure { RcfDre, DpfDre, IterRcfDre, IterDpfDre, SfDre };

const char* display_name(Procedure p);  // e.g. "I(DPF+DRE)"
const char* flag_name(Procedure p);     // e.g. "idpf"
std::optional<Procedure> parse_procedure(const std::string& flag);
std::vector<Procedure> all_procedures();

/// One record per simplex iteration, concatenated across outer iterations.
/// gap_percent is the share of the initial dual gap still open at that
/// iteration of its own solve: 100 * (zeta_final - zeta) / (zeta_final - zeta_0).
struct TracePoint {
  long global_index = 0;
  int outer_iteration = 1;
  long iter_in_solve = 0;
  double zeta = 0.0;
  long cum_fixed = 0;
  double gap_percent = 0.0;
};

struct RunTrace {
  std::vector<TracePoint> points;
};

struct ProcedureResult {
  Procedure procedure = Procedure::RcfDre;
  ReducedInstance final;  // relative to the input instance
  int outer_iterations = 0;
  RunTrace trace;
  long n_final = 0;  // free columns left (empty-coverage columns counted as fixed)
  long m_final = 0;
  long fixed0 = 0;
  long fixed1 = 0;
  std::map<int, Provenance> provenance;  // original 1-based column -> first fixer
  std::vector<long> fixes_per_outer;
  std::vector<long> simplex_iters_per_outer;
  std::chrono::milliseconds wall_time{0};
};

/// Runs one procedure against an instance with a valid upper bound `ub`
/// (the objective of some feasible cover). jobs only affects the strong-fix
/// subproblem solves.
ProcedureResult run_procedure(const ScpInstance& inst, double ub, Procedure proc,
                              const SolverConfig& cfg, int jobs = 1);

struct SuiteItem {
  std::string name;
  ScpInstance instance;
};

struct SuiteRow {
  std::string instance;
  long n0 = 0;
  long m0 = 0;
  ProcedureResult result;
};

/// Full cross product of instances and procedures; every instance must have a
/// UB entry (MissingUb otherwise). jobs parallelizes across runs with output
/// order fixed by input order.
std::vector<SuiteRow> run_suite(const std::vector<SuiteItem>& items, const UbTable& ubs,
                                const std::vector<Procedure>& procedures,
                                const SolverConfig& cfg, int jobs = 1);

}  // namespace covfix

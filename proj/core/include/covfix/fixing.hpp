#pragma once

#include <map>
#include <set>
#include <vector>

#include "covfix/instance.hpp"
#include "covfix/simplex.hpp"

namespace covfix {

enum class Strategy { Rcf, Dpf, Sf, Dre };

const char* to_string(Strategy s);

struct Provenance {
  Strategy strategy = Strategy::Rcf;
  long iterate_index = 0;  // simplex iteration whose dual point first fixed it
};

/// Per-variable fixing verdicts over one instance (0-based column indices).
/// Fix-to-one entries only ever come from singleton-row elimination; the dual
/// of the covering relaxation has no machinery to force a column in.
struct FixSet {
  std::set<int> to_zero;
  std::set<int> to_one;
  std::map<int, Provenance> provenance;

  bool fixed(int j) const { return to_zero.count(j) != 0 || to_one.count(j) != 0; }
  void add_zero(int j, Strategy strategy, long iterate_index);
  void add_one(int j, Strategy strategy, long iterate_index);
  size_t size() const { return to_zero.size() + to_one.size(); }
};

/// Threshold guard for the fix-to-zero rule: a column is fixed when its
/// reduced cost strictly exceeds ub - zeta by more than this, erring toward
/// not fixing under roundoff.
inline constexpr double kEpsFix = 1e-6;

/// Applies the reduced-cost rule at a single dual-feasible point: every free
/// column whose reduced cost strictly exceeds ub - zeta is fixed to zero.
/// Columns already in `acc` are skipped. Throws InvalidBound when the dual
/// objective exceeds ub beyond tolerance (the claimed bound is not valid).
FixSet fix_from_dual(const ScpInstance& inst, const DualIterate& it, double ub, FixSet acc,
                     Strategy tag = Strategy::Rcf);

/// Classic reduced-cost fixing: the rule applied to the final iterate of an
/// optimal solve only. Throws NotOptimal when the solve hit its iteration cap.
FixSet rcf(const ScpInstance& inst, const SolveResult& result, double ub);

/// Accumulates fixes over every dual-feasible iterate streamed by one solve,
/// and records per-iteration (zeta, cumulative fixed) pairs for trace output.
/// Bind one listener to one solve.
class DpfListener {
 public:
  DpfListener(const ScpInstance& inst, double ub) : inst_(inst), ub_(ub) {}

  void operator()(const DualIterate& it);

  const FixSet& fixes() const { return fixes_; }

  struct TraceRow {
    long iter_index;
    double zeta;
    long cum_fixed;
  };
  const std::vector<TraceRow>& trace() const { return trace_; }

 private:
  const ScpInstance& inst_;
  double ub_;
  FixSet fixes_;
  std::vector<TraceRow> trace_;
};

}  // namespace covfix

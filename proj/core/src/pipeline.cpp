#include "covfix/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <thread>

#include "covfix/dre.hpp"
#include "covfix/strong_fix.hpp"

namespace covfix {

const char* display_name(Procedure p) {
  switch (p) {
    case Procedure::RcfDre: return "RCF+DRE";
    case Procedure::DpfDre: return "DPF+DRE";
    case Procedure::IterRcfDre: return "I(RCF+DRE)";
    case Procedure::IterDpfDre: return "I(DPF+DRE)";
    case Procedure::SfDre: return "SF+DRE";
  }
  return "?";
}

const char* flag_name(Procedure p) {
  switch (p) {
    case Procedure::RcfDre: return "rcf";
    case Procedure::DpfDre: return "dpf";
    case Procedure::IterRcfDre: return "irc";
    case Procedure::IterDpfDre: return "idpf";
    case Procedure::SfDre: return "sf";
  }
  return "?";
}

std::optional<Procedure> parse_procedure(const std::string& flag) {
  for (Procedure p : all_procedures()) {
    if (flag == flag_name(p)) return p;
  }
  return std::nullopt;
}

std::vector<Procedure> all_procedures() {
  return {Procedure::RcfDre, Procedure::DpfDre, Procedure::IterRcfDre, Procedure::IterDpfDre,
          Procedure::SfDre};
}

namespace {

// Tracks the cumulative reduction from the original instance, translating
// per-pass fix sets (expressed on the current sub-instance) back to original
// column IDs.
struct Accumulator {
  ReducedInstance total;
  ProcedureResult* result;

  const ScpInstance& current() const { return total.instance; }

  void apply_zero_fixes(const FixSet& fixes) {
    if (fixes.to_zero.empty()) return;
    std::vector<int> drop(fixes.to_zero.begin(), fixes.to_zero.end());
    for (int j : drop) {
      result->provenance.emplace(total.col_map[j], fixes.provenance.at(j));
    }
    total = compose(total, restrict_instance(current(), drop, {}, {}));
  }

  void apply_dre(int outer_iteration) {
    ReducedInstance red = dre_fixpoint(current());
    for (int id : red.fixed_to_one) {
      result->provenance.emplace(total.col_map[id - 1],
                                 Provenance{Strategy::Dre, outer_iteration});
    }
    total = compose(total, red);
  }

  void drop_uncoverable_columns() {
    std::vector<int> empty_cols;
    for (int j = 0; j < current().n_cols; ++j) {
      if (current().cols[j].empty()) empty_cols.push_back(j);
    }
    if (!empty_cols.empty()) {
      total = compose(total, restrict_instance(current(), empty_cols, {}, {}));
    }
  }
};

// Appends one solve's iterate log to the trace, rescaling the per-solve gap
// once the final objective is known.
void append_trace(ProcedureResult& result, int outer_iteration, long base_fixed,
                  const std::vector<DpfListener::TraceRow>& rows) {
  if (rows.empty()) return;
  const double zeta0 = rows.front().zeta;
  const double zetaf = rows.back().zeta;
  const double span = zetaf - zeta0;
  for (const auto& row : rows) {
    TracePoint pt;
    pt.global_index = static_cast<long>(result.trace.points.size());
    pt.outer_iteration = outer_iteration;
    pt.iter_in_solve = row.iter_index;
    pt.zeta = row.zeta;
    pt.cum_fixed = base_fixed + row.cum_fixed;
    pt.gap_percent = span > 0.0 ? 100.0 * (zetaf - row.zeta) / span : 0.0;
    result.trace.points.push_back(pt);
  }
}

void finalize(Accumulator& acc, ProcedureResult& result) {
  acc.drop_uncoverable_columns();
  result.final = std::move(acc.total);
  result.n_final = result.final.instance.n_cols;
  result.m_final = result.final.instance.n_rows;
  result.fixed0 = static_cast<long>(result.final.fixed_to_zero.size());
  result.fixed1 = static_cast<long>(result.final.fixed_to_one.size());
}

void run_single_pass(const ScpInstance& inst, double ub, bool dual_path, const SolverConfig& cfg,
                     Accumulator& acc, ProcedureResult& result) {
  FixSet fixes;
  if (dual_path) {
    DpfListener listener(inst, ub);
    solve(inst, cfg, std::ref(listener));
    fixes = listener.fixes();
    append_trace(result, 1, 0, listener.trace());
    result.simplex_iters_per_outer.push_back(
        listener.trace().empty() ? 0 : listener.trace().back().iter_index);
  } else {
    std::vector<DpfListener::TraceRow> rows;
    SolveResult res = solve(inst, cfg, [&rows](const DualIterate& it) {
      rows.push_back({it.iter_index, it.zeta, 0});
    });
    fixes = rcf(inst, res, ub);
    if (!rows.empty()) rows.back().cum_fixed = static_cast<long>(fixes.to_zero.size());
    append_trace(result, 1, 0, rows);
    result.simplex_iters_per_outer.push_back(res.iterations);
  }
  result.outer_iterations = 1;
  result.fixes_per_outer.push_back(static_cast<long>(fixes.to_zero.size()));
  acc.apply_zero_fixes(fixes);
  if (!fixes.to_zero.empty()) acc.apply_dre(1);
}

void run_iterative(double ub, bool dual_path, const SolverConfig& cfg, Accumulator& acc,
                   ProcedureResult& result) {
  int outer = 0;
  while (acc.current().n_rows > 0 && acc.current().n_cols > 0) {
    ++outer;
    const double current_ub = ub - acc.total.cost_offset;
    FixSet fixes;
    if (dual_path) {
      DpfListener listener(acc.current(), current_ub);
      solve(acc.current(), cfg, std::ref(listener));
      fixes = listener.fixes();
      append_trace(result, outer,
                   result.trace.points.empty() ? 0 : result.trace.points.back().cum_fixed,
                   listener.trace());
      result.simplex_iters_per_outer.push_back(
          listener.trace().empty() ? 0 : listener.trace().back().iter_index);
    } else {
      std::vector<DpfListener::TraceRow> rows;
      SolveResult res = solve(acc.current(), cfg, [&rows](const DualIterate& it) {
        rows.push_back({it.iter_index, it.zeta, 0});
      });
      fixes = rcf(acc.current(), res, current_ub);
      if (!rows.empty()) rows.back().cum_fixed = static_cast<long>(fixes.to_zero.size());
      append_trace(result, outer, result.trace.points.empty() ? 0 : result.trace.points.back().cum_fixed,
                   rows);
      result.simplex_iters_per_outer.push_back(res.iterations);
    }
    result.fixes_per_outer.push_back(static_cast<long>(fixes.to_zero.size()));
    if (fixes.to_zero.empty()) break;
    acc.apply_zero_fixes(fixes);
    acc.apply_dre(outer);
  }
  result.outer_iterations = std::max(outer, 1);
}

}  // namespace

ProcedureResult run_procedure(const ScpInstance& inst, double ub, Procedure proc,
                              const SolverConfig& cfg, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  ProcedureResult result;
  result.procedure = proc;
  Accumulator acc{identity_reduction(inst), &result};
  switch (proc) {
    case Procedure::RcfDre:
      run_single_pass(inst, ub, /*dual_path=*/false, cfg, acc, result);
      break;
    case Procedure::DpfDre:
      run_single_pass(inst, ub, /*dual_path=*/true, cfg, acc, result);
      break;
    case Procedure::IterRcfDre:
      run_iterative(ub, /*dual_path=*/false, cfg, acc, result);
      break;
    case Procedure::IterDpfDre:
      run_iterative(ub, /*dual_path=*/true, cfg, acc, result);
      break;
    case Procedure::SfDre: {
      SfReport report = strong_fix(inst, ub, cfg, /*cross_certificates=*/true, jobs);
      result.outer_iterations = 1;
      result.fixes_per_outer.push_back(static_cast<long>(report.fix_set.to_zero.size()));
      acc.apply_zero_fixes(report.fix_set);
      if (!report.fix_set.to_zero.empty()) acc.apply_dre(1);
      break;
    }
  }
  finalize(acc, result);
  result.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return result;
}

std::vector<SuiteRow> run_suite(const std::vector<SuiteItem>& items, const UbTable& ubs,
                                const std::vector<Procedure>& procedures,
                                const SolverConfig& cfg, int jobs) {
  for (const auto& item : items) {
    if (!ubs.contains(item.name)) {
      throw Error(ErrorCode::MissingUb, "no UB entry for " + item.name);
    }
  }
  std::vector<SuiteRow> rows(items.size() * procedures.size());
  const int total = static_cast<int>(rows.size());
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(static_cast<size_t>(std::max(jobs, 1)));
  auto worker = [&](int tid) {
    try {
      for (int idx = next.fetch_add(1); idx < total; idx = next.fetch_add(1)) {
        const auto& item = items[idx / procedures.size()];
        const Procedure proc = procedures[idx % procedures.size()];
        SuiteRow row;
        row.instance = item.name;
        row.n0 = item.instance.n_cols;
        row.m0 = item.instance.n_rows;
        row.result = run_procedure(item.instance, ubs.at(item.name), proc, cfg, 1);
        rows[idx] = std::move(row);
      }
    } catch (...) {
      errors[tid] = std::current_exception();
    }
  };
  if (jobs <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t) workers.emplace_back(worker, t);
    for (auto& w : workers) w.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

}  // namespace covfix

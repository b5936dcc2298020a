#include "covfix/strong_fix.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <exception>
#include <thread>

namespace covfix {

namespace {

// Dual-vertex enumeration value of min{w'z : Az >= e, z >= 0} for desk-scale
// instances (m, n <= 8). Mirrors the oracle approach; kept here because the
// strong-fixing check needs a slightly larger row cap.
double enumerate_lp_value(const ScpInstance& inst) {
  const int m = inst.n_rows;
  const int n = inst.n_cols;
  if (m > 8 || n > 8) throw Error(ErrorCode::TooLarge, "sf_oracle_value caps at m, n <= 8");
  if (m == 0) return 0.0;
  const int total = n + m;
  double best = 0.0;
  for (std::uint32_t active = 0; active < (std::uint32_t{1} << total); ++active) {
    if (std::popcount(active) != m) continue;
    double a[64] = {0};
    double b[8] = {0};
    int r = 0;
    for (int c = 0; c < total; ++c) {
      if (!(active >> c & 1)) continue;
      if (c < n) {
        for (int i : inst.cols[c]) a[r * m + i] = 1.0;
        b[r] = inst.cost[c];
      } else {
        a[r * m + (c - n)] = 1.0;
      }
      ++r;
    }
    // solve a * u = b
    bool singular = false;
    for (int col = 0; col < m && !singular; ++col) {
      int piv = col;
      for (int rr = col + 1; rr < m; ++rr) {
        if (std::fabs(a[rr * m + col]) > std::fabs(a[piv * m + col])) piv = rr;
      }
      if (std::fabs(a[piv * m + col]) < 1e-9) {
        singular = true;
        break;
      }
      if (piv != col) {
        for (int t = 0; t < m; ++t) std::swap(a[piv * m + t], a[col * m + t]);
        std::swap(b[piv], b[col]);
      }
      for (int rr = 0; rr < m; ++rr) {
        if (rr == col) continue;
        const double f = a[rr * m + col] / a[col * m + col];
        if (f == 0.0) continue;
        for (int t = col; t < m; ++t) a[rr * m + t] -= f * a[col * m + t];
        b[rr] -= f * b[col];
      }
    }
    if (singular) continue;
    for (int rr = 0; rr < m; ++rr) b[rr] /= a[rr * m + rr];
    bool feasible = true;
    for (int i = 0; i < m && feasible; ++i) feasible = b[i] >= -1e-9;
    for (int j = 0; j < n && feasible; ++j) {
      double lhs = 0.0;
      for (int i : inst.cols[j]) lhs += b[i];
      feasible = lhs <= inst.cost[j] + 1e-9;
    }
    if (!feasible) continue;
    double zeta = 0.0;
    for (int i = 0; i < m; ++i) zeta += b[i];
    if (zeta > best) best = zeta;
  }
  return best;
}

std::vector<double> sf_objective(const ScpInstance& inst, int j) {
  std::vector<double> obj(inst.n_rows, 1.0);
  for (int i : inst.cols[j]) obj[i] = 0.0;  // e - A_{.j}
  return obj;
}

DualIterate as_dual_certificate(const SolveResult& res, long tag) {
  DualIterate it;
  it.iter_index = tag;
  it.u = res.final.u;
  it.reduced_costs = res.final.reduced_costs;
  it.zeta = 0.0;
  for (double ui : res.final.u) it.zeta += ui;  // u'e, not the subproblem objective
  return it;
}

}  // namespace

SfReport strong_fix(const ScpInstance& inst, double ub, const SolverConfig& cfg,
                    bool cross_certificates, int jobs) {
  SfReport rep;
  const int n = inst.n_cols;

  if (jobs > 1) {
    // Cold starts, one record per column, merged in index order.
    rep.per_column.resize(n);
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(jobs));
    const int chunk = (n + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
      const int lo = t * chunk;
      const int hi = std::min(n, lo + chunk);
      if (lo >= hi) break;
      workers.emplace_back([&, lo, hi, t] {
        try {
          for (int j = lo; j < hi; ++j) {
            SolveResult res = solve_with_objective(inst, sf_objective(inst, j), cfg);
            if (res.status != SolveStatus::Optimal) {
              throw Error(ErrorCode::NotOptimal, "strong-fixing subproblem hit iteration limit");
            }
            const double value = inst.cost[j] + res.final.zeta;
            rep.per_column[j] = {j, value, value > ub + kEpsFix};
          }
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    rep.lp_solves = n;
    for (int j = 0; j < n; ++j) {
      if (rep.per_column[j].exceeded) rep.fix_set.add_zero(j, Strategy::Sf, j);
    }
    return rep;
  }

  Basis warm;
  bool have_warm = false;
  for (int j = 0; j < n; ++j) {
    if (rep.fix_set.fixed(j)) {
      rep.skipped.push_back(j);
      continue;
    }
    SolveResult res =
        solve_with_objective(inst, sf_objective(inst, j), cfg, have_warm ? &warm : nullptr);
    if (res.status != SolveStatus::Optimal) {
      throw Error(ErrorCode::NotOptimal, "strong-fixing subproblem hit iteration limit");
    }
    warm = res.basis;
    have_warm = true;
    ++rep.lp_solves;
    const double value = inst.cost[j] + res.final.zeta;
    const bool exceeded = value > ub + kEpsFix;
    rep.per_column.push_back({j, value, exceeded});
    if (exceeded) rep.fix_set.add_zero(j, Strategy::Sf, j);
    if (cross_certificates) {
      rep.fix_set = fix_from_dual(inst, as_dual_certificate(res, j), ub,
                                  std::move(rep.fix_set), Strategy::Sf);
    }
  }
  return rep;
}

double sf_oracle_value(const ScpInstance& inst, int j) {
  if (inst.n_cols > 8) throw Error(ErrorCode::TooLarge, "sf_oracle_value caps at n <= 8");
  if (j < 0 || j >= inst.n_cols) throw Error(ErrorCode::IndexOutOfRange, "column index");
  // Forcing z_j = 1 satisfies every row the column covers; what remains is
  // the relaxation over the uncovered rows.
  ReducedInstance sub = restrict_instance(inst, {}, {}, inst.cols[j]);
  return inst.cost[j] + enumerate_lp_value(sub.instance);
}

}  // namespace covfix

#include "covfix/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace covfix {

namespace {

// Primal simplex on max{c'u : u'A <= w', u >= 0} in compact form.
//
// In standard form the problem has n equality rows (one per dual constraint)
// over m structural variables u_i and n slacks s_j. At any basis at most
// min(m, n) structurals are basic, so the n x n basis matrix is the identity
// outside a k x k working block W indexed by the basic structural rows Mb
// (columns of W) and the tight dual constraints Jb (rows of W):
//   W[r][c] = A[Mb[c]][Jb[r]].
// The explicit inverse of W is maintained under rank-one / bordered updates
// and rebuilt from scratch every refactor_interval pivots.
class Engine {
 public:
  Engine(const ScpInstance& inst, const std::vector<double>& obj, const SolverConfig& cfg)
      : inst_(inst), c_(obj), cfg_(cfg), m_(inst.n_rows), n_(inst.n_cols) {
    in_Mb_.assign(m_, 0);
    pos_Jb_.assign(n_, -1);
    u_.assign(m_, 0.0);
    s_ = inst_.cost;
    acc_.assign(m_, 0.0);
    hs_.assign(n_, 0.0);
    hs_stamp_.assign(n_, 0);
    anti_cycling_ = cfg.anti_cycling >= 0 ? cfg.anti_cycling : std::max(50, 10 * m_);
    bland_ = cfg.pricing == Pricing::Bland;
  }

  void warm_start(const Basis& basis) {
    if (basis.basic_rows.size() != basis.tight_cols.size()) {
      throw Error(ErrorCode::NumericalBreakdown, "warm basis has mismatched dimensions");
    }
    Mb_ = basis.basic_rows;
    Jb_ = basis.tight_cols;
    for (int i : Mb_) {
      if (i < 0 || i >= m_ || in_Mb_[i]) throw Error(ErrorCode::IndexOutOfRange, "warm basis row");
      in_Mb_[i] = 1;
    }
    for (size_t r = 0; r < Jb_.size(); ++r) {
      int j = Jb_[r];
      if (j < 0 || j >= n_ || pos_Jb_[j] >= 0) throw Error(ErrorCode::IndexOutOfRange, "warm basis column");
      pos_Jb_[j] = static_cast<int>(r);
    }
    refactor();
  }

  SolveResult run(const IterateListener& listener) {
    SolveResult result;
    compute_state();
    long pivots_since_refactor = 0;
    while (true) {
      emit(listener);
      compute_multipliers();
      const Candidate entering = price();
      if (entering.kind == Candidate::None) {
        result.status = SolveStatus::Optimal;
        break;
      }
      if (iter_ >= cfg_.max_iters) {
        result.status = SolveStatus::IterationLimit;
        break;
      }
      compute_direction(entering);
      const Leaving leaving = ratio_test();
      if (leaving.kind == Leaving::Unbounded) {
        throw Error(ErrorCode::Unbounded, "dual region unbounded along entering direction");
      }
      if (leaving.step < kDegenTol) {
        if (++degen_streak_ > anti_cycling_) bland_ = true;
      } else {
        degen_streak_ = 0;
      }
      pivot(entering, leaving);
      ++iter_;
      if (++pivots_since_refactor >= cfg_.refactor_interval) {
        refactor();
        pivots_since_refactor = 0;
      }
      compute_state();
    }
    result.iterations = iter_;
    result.final = make_iterate();
    result.basis.basic_rows = Mb_;
    result.basis.tight_cols = Jb_;
    return result;
  }

 private:
  static constexpr double kDegenTol = 1e-11;

  struct Candidate {
    enum Kind { None, Structural, Slack } kind = None;
    int index = -1;  // row i, or position r in Jb for a slack
    double d = 0.0;
  };
  struct Leaving {
    enum Kind { Unbounded, Structural, Slack } kind = Unbounded;
    int index = -1;  // position cc in Mb, or column j (currently non-tight)
    double step = 0.0;
    double pivot = 0.0;
  };

  int k() const { return static_cast<int>(Mb_.size()); }

  void refactor() {
    const int kk = k();
    std::vector<double> w(static_cast<size_t>(kk) * kk, 0.0);
    for (int c = 0; c < kk; ++c) {
      for (int j : inst_.rows[Mb_[c]]) {
        int r = pos_Jb_[j];
        if (r >= 0) w[static_cast<size_t>(r) * kk + c] = 1.0;
      }
    }
    // Gauss-Jordan with partial pivoting on [W | I].
    std::vector<double> inv(static_cast<size_t>(kk) * kk, 0.0);
    for (int i = 0; i < kk; ++i) inv[static_cast<size_t>(i) * kk + i] = 1.0;
    for (int col = 0; col < kk; ++col) {
      int piv = col;
      for (int r = col + 1; r < kk; ++r) {
        if (std::fabs(w[static_cast<size_t>(r) * kk + col]) >
            std::fabs(w[static_cast<size_t>(piv) * kk + col]))
          piv = r;
      }
      const double pv = w[static_cast<size_t>(piv) * kk + col];
      if (std::fabs(pv) < cfg_.eps_pivot) {
        throw Error(ErrorCode::NumericalBreakdown, "working basis singular during refactorization");
      }
      if (piv != col) {
        for (int t = 0; t < kk; ++t) {
          std::swap(w[static_cast<size_t>(piv) * kk + t], w[static_cast<size_t>(col) * kk + t]);
          std::swap(inv[static_cast<size_t>(piv) * kk + t], inv[static_cast<size_t>(col) * kk + t]);
        }
      }
      const double f0 = 1.0 / w[static_cast<size_t>(col) * kk + col];
      for (int t = 0; t < kk; ++t) {
        w[static_cast<size_t>(col) * kk + t] *= f0;
        inv[static_cast<size_t>(col) * kk + t] *= f0;
      }
      for (int r = 0; r < kk; ++r) {
        if (r == col) continue;
        const double f = w[static_cast<size_t>(r) * kk + col];
        if (f == 0.0) continue;
        for (int t = 0; t < kk; ++t) {
          w[static_cast<size_t>(r) * kk + t] -= f * w[static_cast<size_t>(col) * kk + t];
          inv[static_cast<size_t>(r) * kk + t] -= f * inv[static_cast<size_t>(col) * kk + t];
        }
      }
    }
    Winv_ = std::move(inv);
  }

  // Basic solution: u on Mb from W u = w_Jb, slacks from direct substitution.
  void compute_state() {
    const int kk = k();
    std::fill(u_.begin(), u_.end(), 0.0);
    for (int c = 0; c < kk; ++c) {
      double v = 0.0;
      const double* row = Winv_.data() + static_cast<size_t>(c) * kk;
      for (int r = 0; r < kk; ++r) v += row[r] * inst_.cost[Jb_[r]];
      u_[Mb_[c]] = v;
    }
    s_ = inst_.cost;
    for (int c = 0; c < kk; ++c) {
      const double v = u_[Mb_[c]];
      if (v == 0.0) continue;
      for (int j : inst_.rows[Mb_[c]]) s_[j] -= v;
    }
    for (int j : Jb_) s_[j] = 0.0;  // tight by definition of the basis
    zeta_ = 0.0;
    for (int c = 0; c < kk; ++c) zeta_ += c_[Mb_[c]] * u_[Mb_[c]];
  }

  // y solves W'y = c_Mb; y[r] prices the tight constraint Jb[r].
  void compute_multipliers() {
    const int kk = k();
    y_.assign(kk, 0.0);
    for (int r = 0; r < kk; ++r) {
      double v = 0.0;
      for (int c = 0; c < kk; ++c) v += Winv_[static_cast<size_t>(c) * kk + r] * c_[Mb_[c]];
      y_[r] = v;
    }
  }

  Candidate price() {
    const int kk = k();
    // acc[i] = sum of y over the tight constraints covering row i.
    std::fill(acc_.begin(), acc_.end(), 0.0);
    for (int r = 0; r < kk; ++r) {
      const double yr = y_[r];
      if (yr == 0.0) continue;
      for (int i : inst_.cols[Jb_[r]]) acc_[i] += yr;
    }
    Candidate best;
    auto consider = [&](Candidate::Kind kind, int index, int var_index, double d) {
      if (d <= cfg_.eps_opt) return;
      if (bland_) {
        if (best.kind == Candidate::None || var_index < best_var_) {
          best = {kind, index, d};
          best_var_ = var_index;
        }
      } else if (best.kind == Candidate::None || d > best.d ||
                 (d == best.d && var_index < best_var_)) {
        best = {kind, index, d};
        best_var_ = var_index;
      }
    };
    for (int i = 0; i < m_; ++i) {
      if (!in_Mb_[i]) consider(Candidate::Structural, i, i, c_[i] - acc_[i]);
    }
    for (int r = 0; r < kk; ++r) {
      consider(Candidate::Slack, r, m_ + Jb_[r], -y_[r]);
    }
    return best;
  }

  // h_U over basic structurals and h_S over basic slacks such that increasing
  // the entering variable by t changes the basics by -t*h.
  void compute_direction(const Candidate& entering) {
    const int kk = k();
    hU_.assign(kk, 0.0);
    ++hs_epoch_;
    hs_touched_.clear();
    auto touch = [&](int j) {
      if (hs_stamp_[j] != hs_epoch_) {
        hs_stamp_[j] = hs_epoch_;
        hs_[j] = 0.0;
        hs_touched_.push_back(j);
      }
    };
    if (entering.kind == Candidate::Structural) {
      const int p = entering.index;
      v_.assign(kk, 0.0);
      for (int j : inst_.rows[p]) {
        int r = pos_Jb_[j];
        if (r >= 0) v_[r] = 1.0;
      }
      for (int c = 0; c < kk; ++c) {
        double h = 0.0;
        const double* row = Winv_.data() + static_cast<size_t>(c) * kk;
        for (int r = 0; r < kk; ++r) h += row[r] * v_[r];
        hU_[c] = h;
      }
      for (int j : inst_.rows[p]) {
        if (pos_Jb_[j] < 0) {
          touch(j);
          hs_[j] += 1.0;
        }
      }
    } else {
      const int r = entering.index;
      for (int c = 0; c < kk; ++c) hU_[c] = Winv_[static_cast<size_t>(c) * kk + r];
    }
    for (int c = 0; c < kk; ++c) {
      const double h = hU_[c];
      if (std::fabs(h) < 1e-14) continue;
      for (int j : inst_.rows[Mb_[c]]) {
        if (pos_Jb_[j] < 0) {
          touch(j);
          hs_[j] -= h;
        }
      }
    }
  }

  Leaving ratio_test() {
    const int kk = k();
    double best_step = std::numeric_limits<double>::infinity();
    // First pass: minimum ratio.
    for (int c = 0; c < kk; ++c) {
      if (hU_[c] > cfg_.eps_pivot) {
        best_step = std::min(best_step, std::max(u_[Mb_[c]], 0.0) / hU_[c]);
      }
    }
    for (int j : hs_touched_) {
      if (hs_[j] > cfg_.eps_pivot) {
        best_step = std::min(best_step, std::max(s_[j], 0.0) / hs_[j]);
      }
    }
    Leaving leave;
    if (!std::isfinite(best_step)) return leave;
    // Second pass: among near-ties prefer the largest pivot (stability), with
    // Bland's rule overriding to the smallest variable index.
    const double tol = best_step + 1e-9 * (1.0 + best_step);
    int best_var = -1;
    auto consider = [&](Leaving::Kind kind, int index, int var_index, double step, double piv) {
      if (step > tol) return;
      bool take;
      if (leave.kind == Leaving::Unbounded) {
        take = true;
      } else if (bland_) {
        take = var_index < best_var;
      } else {
        take = piv > leave.pivot || (piv == leave.pivot && var_index < best_var);
      }
      if (take) {
        leave = {kind, index, best_step, piv};
        best_var = var_index;
      }
    };
    for (int c = 0; c < kk; ++c) {
      if (hU_[c] > cfg_.eps_pivot) {
        consider(Leaving::Structural, c, Mb_[c], std::max(u_[Mb_[c]], 0.0) / hU_[c], hU_[c]);
      }
    }
    for (int j : hs_touched_) {
      if (hs_[j] > cfg_.eps_pivot) {
        consider(Leaving::Slack, j, m_ + j, std::max(s_[j], 0.0) / hs_[j], hs_[j]);
      }
    }
    return leave;
  }

  void pivot(const Candidate& entering, const Leaving& leaving) {
    const int kk = k();
    if (entering.kind == Candidate::Structural && leaving.kind == Leaving::Structural) {
      // Replace column cc of W by the entering row's coefficients.
      const int cc = leaving.index;
      const double pv = hU_[cc];
      double* prow = Winv_.data() + static_cast<size_t>(cc) * kk;
      for (int r = 0; r < kk; ++r) prow[r] /= pv;
      for (int c = 0; c < kk; ++c) {
        if (c == cc) continue;
        const double f = hU_[c];
        if (f == 0.0) continue;
        double* row = Winv_.data() + static_cast<size_t>(c) * kk;
        for (int r = 0; r < kk; ++r) row[r] -= f * prow[r];
      }
      in_Mb_[Mb_[cc]] = 0;
      Mb_[cc] = entering.index;
      in_Mb_[entering.index] = 1;
    } else if (entering.kind == Candidate::Structural && leaving.kind == Leaving::Slack) {
      // Border W with a new column (entering row) and a new row (newly tight
      // constraint). The Schur complement equals the ratio-test pivot.
      const int p = entering.index;
      const int j = leaving.index;
      const double schur = hs_[j];
      g_.assign(kk, 0.0);
      for (int c = 0; c < kk; ++c) g_[c] = inst_.covers(Mb_[c], j) ? 1.0 : 0.0;
      // q1[r] = (g' Winv)[r]
      q1_.assign(kk, 0.0);
      for (int c = 0; c < kk; ++c) {
        const double gc = g_[c];
        if (gc == 0.0) continue;
        const double* row = Winv_.data() + static_cast<size_t>(c) * kk;
        for (int r = 0; r < kk; ++r) q1_[r] += gc * row[r];
      }
      const int nk = kk + 1;
      std::vector<double> next(static_cast<size_t>(nk) * nk, 0.0);
      for (int c = 0; c < kk; ++c) {
        const double* row = Winv_.data() + static_cast<size_t>(c) * kk;
        double* nrow = next.data() + static_cast<size_t>(c) * nk;
        const double f = hU_[c] / schur;
        for (int r = 0; r < kk; ++r) nrow[r] = row[r] + f * q1_[r];
        nrow[kk] = -f;
      }
      double* last = next.data() + static_cast<size_t>(kk) * nk;
      for (int r = 0; r < kk; ++r) last[r] = -q1_[r] / schur;
      last[kk] = 1.0 / schur;
      Winv_ = std::move(next);
      Mb_.push_back(p);
      in_Mb_[p] = 1;
      pos_Jb_[j] = static_cast<int>(Jb_.size());
      Jb_.push_back(j);
    } else if (entering.kind == Candidate::Slack && leaving.kind == Leaving::Structural) {
      // Drop row r (constraint goes slack) and column cc (structural leaves).
      const int r = entering.index;
      const int cc = leaving.index;
      const double pv = Winv_[static_cast<size_t>(cc) * kk + r];
      const int nk = kk - 1;
      std::vector<double> next(static_cast<size_t>(nk) * nk, 0.0);
      for (int c = 0, cn = 0; c < kk; ++c) {
        if (c == cc) continue;
        const double* row = Winv_.data() + static_cast<size_t>(c) * kk;
        const double* prow = Winv_.data() + static_cast<size_t>(cc) * kk;
        const double f = row[r] / pv;
        double* nrow = next.data() + static_cast<size_t>(cn) * nk;
        for (int rr = 0, rn = 0; rr < kk; ++rr) {
          if (rr == r) continue;
          nrow[rn++] = row[rr] - f * prow[rr];
        }
        ++cn;
      }
      Winv_ = std::move(next);
      pos_Jb_[Jb_[r]] = -1;
      in_Mb_[Mb_[cc]] = 0;
      Jb_.erase(Jb_.begin() + r);
      Mb_.erase(Mb_.begin() + cc);
      for (size_t t = static_cast<size_t>(r); t < Jb_.size(); ++t) pos_Jb_[Jb_[t]] = static_cast<int>(t);
    } else {
      // Swap which constraint is tight: replace row r of W.
      const int r = entering.index;
      const int j = leaving.index;
      g_.assign(kk, 0.0);
      for (int c = 0; c < kk; ++c) g_[c] = inst_.covers(Mb_[c], j) ? 1.0 : 0.0;
      q1_.assign(kk, 0.0);  // t = g' Winv
      for (int c = 0; c < kk; ++c) {
        const double gc = g_[c];
        if (gc == 0.0) continue;
        const double* row = Winv_.data() + static_cast<size_t>(c) * kk;
        for (int rr = 0; rr < kk; ++rr) q1_[rr] += gc * row[rr];
      }
      const double pv = q1_[r];  // equals -hs_[j], nonzero by the ratio test
      for (int c = 0; c < kk; ++c) {
        double* row = Winv_.data() + static_cast<size_t>(c) * kk;
        const double pr = row[r] / pv;
        for (int rr = 0; rr < kk; ++rr) {
          if (rr == r) continue;
          row[rr] -= pr * q1_[rr];
        }
        row[r] = pr;
      }
      pos_Jb_[Jb_[r]] = -1;
      Jb_[r] = j;
      pos_Jb_[j] = r;
    }
  }

  DualIterate make_iterate() const {
    DualIterate it;
    it.iter_index = iter_;
    it.u = u_;
    it.zeta = zeta_;
    it.reduced_costs = s_;
    return it;
  }

  void emit(const IterateListener& listener) {
    if (listener) listener(make_iterate());
  }

  const ScpInstance& inst_;
  const std::vector<double>& c_;
  SolverConfig cfg_;
  int m_, n_;
  int anti_cycling_ = 0;

  std::vector<int> Mb_, Jb_;
  std::vector<char> in_Mb_;
  std::vector<int> pos_Jb_;
  std::vector<double> Winv_;

  std::vector<double> u_, s_, y_, acc_, hU_, v_, g_, q1_, hs_;
  std::vector<int> hs_stamp_, hs_touched_;
  int hs_epoch_ = 0;
  double zeta_ = 0.0;
  long iter_ = 0;
  int degen_streak_ = 0;
  bool bland_ = false;
  int best_var_ = -1;
};

}  // namespace

SolveResult solve(const ScpInstance& inst, const SolverConfig& cfg,
                  const IterateListener& listener) {
  std::vector<double> ones(inst.n_rows, 1.0);
  return solve_with_objective(inst, ones, cfg, nullptr, listener);
}

SolveResult solve_with_objective(const ScpInstance& inst, const std::vector<double>& objective,
                                 const SolverConfig& cfg, const Basis* warm,
                                 const IterateListener& listener) {
  if (static_cast<int>(objective.size()) != inst.n_rows) {
    throw Error(ErrorCode::IndexOutOfRange, "objective size does not match row count");
  }
  Engine engine(inst, objective, cfg);
  if (warm) engine.warm_start(*warm);
  return engine.run(listener);
}

}  // namespace covfix

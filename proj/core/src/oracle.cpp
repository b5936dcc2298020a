#include "covfix/oracle.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

namespace covfix {
namespace oracle {

namespace {

constexpr double kEps = 1e-9;

std::vector<std::uint64_t> column_row_masks(const ScpInstance& inst) {
  std::vector<std::uint64_t> masks(inst.n_cols, 0);
  for (int j = 0; j < inst.n_cols; ++j) {
    for (int i : inst.cols[j]) masks[j] |= std::uint64_t{1} << i;
  }
  return masks;
}

std::uint64_t full_row_mask(int m) {
  return m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
}

// Solves the k x k system in-place; returns false when singular at kEps.
bool gauss_solve(std::vector<double>& a, std::vector<double>& b, int k) {
  for (int col = 0; col < k; ++col) {
    int piv = col;
    for (int r = col + 1; r < k; ++r) {
      if (std::fabs(a[r * k + col]) > std::fabs(a[piv * k + col])) piv = r;
    }
    if (std::fabs(a[piv * k + col]) < kEps) return false;
    if (piv != col) {
      for (int c = 0; c < k; ++c) std::swap(a[piv * k + c], a[col * k + c]);
      std::swap(b[piv], b[col]);
    }
    for (int r = 0; r < k; ++r) {
      if (r == col) continue;
      double f = a[r * k + col] / a[col * k + col];
      if (f == 0.0) continue;
      for (int c = col; c < k; ++c) a[r * k + c] -= f * a[col * k + c];
      b[r] -= f * b[col];
    }
  }
  for (int r = 0; r < k; ++r) b[r] /= a[r * k + r];
  return true;
}

}  // namespace

ExactResult exact_optimum(const ScpInstance& inst) {
  if (inst.n_cols > 20 || inst.n_rows > 64) {
    throw Error(ErrorCode::TooLarge, "exact_optimum caps at n <= 20, m <= 64");
  }
  const auto masks = column_row_masks(inst);
  const std::uint64_t full = full_row_mask(inst.n_rows);
  double best = std::numeric_limits<double>::infinity();
  std::uint32_t best_mask = 0;
  const std::uint32_t limit = std::uint32_t{1} << inst.n_cols;
  for (std::uint32_t pick = 0; pick < limit; ++pick) {
    double c = 0.0;
    std::uint64_t covered = 0;
    for (int j = 0; j < inst.n_cols; ++j) {
      if (pick >> j & 1) {
        c += inst.cost[j];
        covered |= masks[j];
      }
    }
    if (covered == full && c < best) {
      best = c;
      best_mask = pick;
    }
  }
  if (!std::isfinite(best)) throw Error(ErrorCode::Infeasible, "no feasible cover");
  ExactResult res;
  res.value = best;
  for (int j = 0; j < inst.n_cols; ++j) {
    if (best_mask >> j & 1) res.cover.push_back(j);
  }
  return res;
}

double lp_optimum(const ScpInstance& inst) {
  if (inst.n_rows > 6 || inst.n_cols > 8) {
    throw Error(ErrorCode::TooLarge, "lp_optimum caps at m <= 6, n <= 8");
  }
  const int m = inst.n_rows;
  const int n = inst.n_cols;
  const int total = n + m;  // column constraints first, then u_i >= 0 bounds
  double best = 0.0;        // u = 0 is always feasible
  for (std::uint32_t active = 0; active < (std::uint32_t{1} << total); ++active) {
    if (std::popcount(active) != m) continue;
    std::vector<double> a(static_cast<size_t>(m) * m, 0.0);
    std::vector<double> b(m, 0.0);
    int r = 0;
    for (int c = 0; c < total; ++c) {
      if (!(active >> c & 1)) continue;
      if (c < n) {
        for (int i : inst.cols[c]) a[r * m + i] = 1.0;
        b[r] = inst.cost[c];
      } else {
        a[r * m + (c - n)] = 1.0;
        b[r] = 0.0;
      }
      ++r;
    }
    if (!gauss_solve(a, b, m)) continue;
    const std::vector<double>& u = b;
    bool feasible = true;
    for (int i = 0; i < m && feasible; ++i) feasible = u[i] >= -kEps;
    for (int j = 0; j < n && feasible; ++j) {
      double lhs = 0.0;
      for (int i : inst.cols[j]) lhs += u[i];
      feasible = lhs <= inst.cost[j] + kEps;
    }
    if (!feasible) continue;
    double zeta = 0.0;
    for (int i = 0; i < m; ++i) zeta += u[i];
    if (zeta > best) best = zeta;
  }
  return best;
}

bool fix_validity(const ScpInstance& inst, int j, int bound01, double ub) {
  if (inst.n_cols > 20 || inst.n_rows > 64) {
    throw Error(ErrorCode::TooLarge, "fix_validity caps at n <= 20, m <= 64");
  }
  if (j < 0 || j >= inst.n_cols) throw Error(ErrorCode::IndexOutOfRange, "column index");
  const double opt = exact_optimum(inst).value;
  if (ub < opt - kEps) throw Error(ErrorCode::InvalidBound, "ub below the exact optimum");
  const auto masks = column_row_masks(inst);
  const std::uint64_t full = full_row_mask(inst.n_rows);
  const std::uint32_t limit = std::uint32_t{1} << inst.n_cols;
  for (std::uint32_t pick = 0; pick < limit; ++pick) {
    double c = 0.0;
    std::uint64_t covered = 0;
    for (int k = 0; k < inst.n_cols; ++k) {
      if (pick >> k & 1) {
        c += inst.cost[k];
        covered |= masks[k];
      }
    }
    if (covered != full || c > opt + kEps) continue;  // only optimal covers matter
    const bool uses_j = (pick >> j & 1) != 0;
    if (bound01 == 0 && uses_j) return false;
    if (bound01 == 1 && !uses_j) return false;
  }
  return true;
}

}  // namespace oracle
}  // namespace covfix

#include "covfix/dre.hpp"

#include <algorithm>

namespace covfix {

std::vector<int> dominated_rows(const ScpInstance& inst) {
  const int m = inst.n_rows;
  std::vector<int> deleted;
  // Row i is dominated iff some other row's support is contained in i's
  // (identical supports: the lower index wins). Candidate dominators are
  // gathered through the inverted index: any subset row shares a column.
  std::vector<int> seen(m, -1);
  for (int i = 0; i < m; ++i) {
    const auto& sup = inst.rows[i];
    bool dominated = false;
    for (int j : sup) {
      if (dominated) break;
      for (int cand : inst.cols[j]) {
        if (cand == i || seen[cand] == i) continue;
        seen[cand] = i;
        const auto& csup = inst.rows[cand];
        if (csup.size() > sup.size()) continue;
        if (csup.size() == sup.size() && cand > i) continue;  // identical tie: keep lowest
        if (std::includes(sup.begin(), sup.end(), csup.begin(), csup.end())) {
          dominated = true;
          break;
        }
      }
    }
    if (dominated) deleted.push_back(i);
  }
  return deleted;
}

std::vector<std::pair<int, int>> singleton_rows(const ScpInstance& inst) {
  std::vector<std::pair<int, int>> forced;
  std::vector<char> taken(inst.n_cols, 0);
  for (int i = 0; i < inst.n_rows; ++i) {
    if (inst.rows[i].size() != 1) continue;
    const int j = inst.rows[i][0];
    if (!taken[j]) {
      taken[j] = 1;
      forced.emplace_back(i, j);
    }
  }
  return forced;
}

ReducedInstance dre_fixpoint(const ScpInstance& inst) {
  ReducedInstance total = identity_reduction(inst);
  while (true) {
    bool changed = false;
    const auto dominated = dominated_rows(total.instance);
    if (!dominated.empty()) {
      total = compose(total, restrict_instance(total.instance, {}, {}, dominated));
      changed = true;
    }
    const auto forced = singleton_rows(total.instance);
    if (!forced.empty()) {
      std::vector<int> fix_one;
      for (const auto& [row, col] : forced) fix_one.push_back(col);
      total = compose(total, restrict_instance(total.instance, {}, fix_one, {}));
      changed = true;
    }
    if (!changed) return total;
  }
}

}  // namespace covfix

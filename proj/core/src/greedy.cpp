#include "covfix/greedy.hpp"

namespace covfix {

GreedyResult greedy_ub(const ScpInstance& inst) {
  GreedyResult res;
  std::vector<char> covered(inst.n_rows, 0);
  std::vector<int> fresh(inst.n_cols);  // newly covered rows per column
  for (int j = 0; j < inst.n_cols; ++j) fresh[j] = static_cast<int>(inst.cols[j].size());
  int remaining = inst.n_rows;
  while (remaining > 0) {
    int best = -1;
    double best_ratio = 0.0;
    for (int j = 0; j < inst.n_cols; ++j) {
      if (fresh[j] == 0) continue;
      const double ratio = inst.cost[j] / fresh[j];
      if (best < 0 || ratio < best_ratio) {
        best = j;
        best_ratio = ratio;
      }
    }
    res.cover.push_back(best);
    res.value += inst.cost[best];
    for (int i : inst.cols[best]) {
      if (covered[i]) continue;
      covered[i] = 1;
      --remaining;
      for (int j : inst.rows[i]) --fresh[j];
    }
  }
  return res;
}

}  // namespace covfix

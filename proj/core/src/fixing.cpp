#include "covfix/fixing.hpp"

#include <cmath>
#include <string>

namespace covfix {

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::Rcf: return "rcf";
    case Strategy::Dpf: return "dpf";
    case Strategy::Sf: return "sf";
    case Strategy::Dre: return "dre";
  }
  return "?";
}

void FixSet::add_zero(int j, Strategy strategy, long iterate_index) {
  if (to_one.count(j)) throw Error(ErrorCode::DuplicateIndex, "column fixed to both bounds");
  if (to_zero.insert(j).second) provenance[j] = {strategy, iterate_index};
}

void FixSet::add_one(int j, Strategy strategy, long iterate_index) {
  if (to_zero.count(j)) throw Error(ErrorCode::DuplicateIndex, "column fixed to both bounds");
  if (to_one.insert(j).second) provenance[j] = {strategy, iterate_index};
}

FixSet fix_from_dual(const ScpInstance& inst, const DualIterate& it, double ub, FixSet acc,
                     Strategy tag) {
  const double eps_obj = 1e-6 * (1.0 + std::fabs(it.zeta));
  if (ub < it.zeta - eps_obj) {
    throw Error(ErrorCode::InvalidBound,
                "dual objective " + std::to_string(it.zeta) + " exceeds claimed bound " +
                    std::to_string(ub));
  }
  const double gap = ub - it.zeta;
  for (int j = 0; j < inst.n_cols; ++j) {
    if (acc.fixed(j)) continue;
    const double wbar = it.reduced_costs[j];
    // floor((ub - zeta) / wbar) == 0 means wbar > ub - zeta, strictly.
    if (wbar > 0.0 && wbar - gap > kEpsFix) {
      acc.add_zero(j, tag, it.iter_index);
    }
  }
  return acc;
}

FixSet rcf(const ScpInstance& inst, const SolveResult& result, double ub) {
  if (result.status != SolveStatus::Optimal) {
    throw Error(ErrorCode::NotOptimal, "reduced-cost fixing needs an optimal dual solution");
  }
  return fix_from_dual(inst, result.final, ub, FixSet{}, Strategy::Rcf);
}

void DpfListener::operator()(const DualIterate& it) {
  fixes_ = fix_from_dual(inst_, it, ub_, std::move(fixes_), Strategy::Dpf);
  trace_.push_back({it.iter_index, it.zeta, static_cast<long>(fixes_.to_zero.size())});
}

}  // namespace covfix

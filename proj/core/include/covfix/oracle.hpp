#pragma once

#include <vector>

#include "covfix/instance.hpp"

namespace covfix {
namespace oracle {

// Brute-force ground truth for desk-scale instances. Everything here is
// deliberately independent of the simplex and fixing code paths; hard size
// caps raise TooLarge instead of running slowly.

struct ExactResult {
  double value = 0.0;
  std::vector<int> cover;  // 0-based chosen columns, one optimal cover
};

/// Exhaustive minimum over all 2^n column subsets. Requires n <= 20, m <= 64.
ExactResult exact_optimum(const ScpInstance& inst);

/// LP value of the relaxation, by enumerating basic solutions of the dual
/// region {u >= 0, u'A <= w} and maximizing u'e. Requires m <= 6, n <= 8.
double lp_optimum(const ScpInstance& inst);

/// For bound01 == 0: true iff no optimal cover uses column j.
/// For bound01 == 1: true iff every optimal cover uses column j.
/// ub must be a valid upper bound (>= exact optimum).
bool fix_validity(const ScpInstance& inst, int j, int bound01, double ub);

}  // namespace oracle
}  // namespace covfix

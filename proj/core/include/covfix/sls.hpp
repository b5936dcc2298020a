#pragma once

#include <cstdint>
#include <vector>

#include "covfix/instance.hpp"

namespace covfix {

/// Parameters for the safety-landing-site style random covering instances:
/// n candidate sites and nu network nodes in the unit square, per-site
/// covering radii drawn uniformly from [r_min, r_max]. Demand points (rows)
/// are the nodes plus, in Edges mode, points sampled along a nearest-neighbor
/// proximity graph so that the row count scales well past nu.
///
/// This generator is an analogue of the published instance family, not a
/// replica; reports flag it as such.
struct SlsParams {
  int n = 500;
  int nu = 0;  // 0 means 0.3 * n
  double r_min = 0.11;
  double r_max = 0.19;
  std::uint64_t seed = 0;
  enum class DensityMode { Nodes, Edges } density_mode = DensityMode::Edges;
};

struct GeneratedInstance {
  ScpInstance instance;
  int discarded_rows = 0;  // demand points no site could cover
};

/// Deterministic for a fixed seed; distinct seed streams per ingredient, so
/// widening [r_min, r_max] with the same seed only grows coverage.
/// Throws Degenerate when every candidate row is discarded.
GeneratedInstance generate(const SlsParams& params);

/// Derives independent per-instance seeds from the base seed; instance i is
/// the same whether generated alone or as part of a batch.
std::vector<GeneratedInstance> generate_batch(const SlsParams& params, int count);

}  // namespace covfix

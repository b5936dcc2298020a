#include "covfix/sls.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace covfix {

namespace {

// Counter-based stream: every drawn number is a pure function of
// (seed, stream, counter), so generation order does not matter.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double unit(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
  return (mix(seed ^ mix(stream ^ mix(counter))) >> 11) * 0x1.0p-53;
}

struct Point {
  double x, y;
};

double dist2(const Point& a, const Point& b) {
  const double dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

enum Stream : std::uint64_t { kSiteX = 1, kSiteY, kRadius, kNodeX, kNodeY, kCost };

}  // namespace

GeneratedInstance generate(const SlsParams& params) {
  if (params.n < 1 || !(params.r_min > 0.0) || !(params.r_min <= params.r_max) || params.nu < 0) {
    throw std::invalid_argument("invalid SLS generator parameters");
  }
  const int n = params.n;
  const int nu = params.nu > 0 ? params.nu : std::max(1, static_cast<int>(std::lround(0.3 * n)));
  const std::uint64_t seed = params.seed;

  std::vector<Point> sites(n);
  std::vector<double> radius2(n);
  for (int j = 0; j < n; ++j) {
    sites[j] = {unit(seed, kSiteX, j), unit(seed, kSiteY, j)};
    // The same uniform draw is reused for any radius interval, so widening
    // [r_min, r_max] under a fixed seed never shrinks a radius.
    const double r = params.r_min + unit(seed, kRadius, j) * (params.r_max - params.r_min);
    radius2[j] = r * r;
  }
  std::vector<Point> nodes(nu);
  for (int i = 0; i < nu; ++i) nodes[i] = {unit(seed, kNodeX, i), unit(seed, kNodeY, i)};

  std::vector<Point> demand = nodes;
  if (params.density_mode == SlsParams::DensityMode::Edges && nu >= 2) {
    // Nearest-neighbor proximity graph over the nodes.
    std::vector<std::pair<int, int>> edges;
    const int degree = std::min(3, nu - 1);
    for (int i = 0; i < nu; ++i) {
      std::vector<std::pair<double, int>> near;
      near.reserve(nu - 1);
      for (int t = 0; t < nu; ++t) {
        if (t != i) near.emplace_back(dist2(nodes[i], nodes[t]), t);
      }
      std::partial_sort(near.begin(), near.begin() + degree, near.end());
      for (int d = 0; d < degree; ++d) {
        const int t = near[d].second;
        edges.emplace_back(std::min(i, t), std::max(i, t));
      }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    // Sample evenly spaced points along edges until the row count reaches the
    // density target (about five rows per site).
    const long target = 5L * n;
    const long extra = std::max(0L, target - nu);
    const long per_edge =
        edges.empty() ? 0 : (extra + static_cast<long>(edges.size()) - 1) / static_cast<long>(edges.size());
    for (const auto& [a, b] : edges) {
      for (long t = 1; t <= per_edge; ++t) {
        const double f = static_cast<double>(t) / static_cast<double>(per_edge + 1);
        demand.push_back({nodes[a].x + f * (nodes[b].x - nodes[a].x),
                          nodes[a].y + f * (nodes[b].y - nodes[a].y)});
      }
    }
  }

  std::vector<std::vector<int>> rows;
  rows.reserve(demand.size());
  int discarded = 0;
  for (const Point& p : demand) {
    std::vector<int> support;
    for (int j = 0; j < n; ++j) {
      if (dist2(p, sites[j]) <= radius2[j]) support.push_back(j);
    }
    if (support.empty()) {
      ++discarded;
    } else {
      rows.push_back(std::move(support));
    }
  }
  if (rows.empty()) {
    throw Error(ErrorCode::Degenerate, "every demand point is out of range of every site");
  }

  std::vector<double> cost(n);
  for (int j = 0; j < n; ++j) {
    cost[j] = 1.0 + std::floor(unit(seed, kCost, j) * 100.0);
    if (cost[j] > 100.0) cost[j] = 100.0;
  }

  GeneratedInstance out;
  const int m = static_cast<int>(rows.size());
  out.instance = ScpInstance::validate(m, n, std::move(cost), std::move(rows));
  out.discarded_rows = discarded;
  return out;
}

std::vector<GeneratedInstance> generate_batch(const SlsParams& params, int count) {
  std::vector<GeneratedInstance> out;
  out.reserve(std::max(count, 0));
  for (int i = 0; i < count; ++i) {
    SlsParams p = params;
    if (i > 0) p.seed = mix(params.seed ^ mix(static_cast<std::uint64_t>(i)));
    out.push_back(generate(p));
  }
  return out;
}

}  // namespace covfix

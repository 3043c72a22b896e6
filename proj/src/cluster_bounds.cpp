#include "relaycap/cluster_bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "relaycap/rayleigh.hpp"

namespace relaycap {

double cluster_upper_bound(const ClusterSpec& spec, const NetworkConfig& cfg,
                           const McConfig& mc) {
  if (spec.nodes < 1) {
    throw std::domain_error("cluster_upper_bound: nodes must be >= 1, got " +
                            std::to_string(spec.nodes));
  }
  if (spec.fading == ClusterFading::QuasiStaticPhase) {
    // Unknown phases forbid coherent combining, and the cluster shares the
    // same total power as the single link, so the ceiling is the
    // non-cooperative rate for either side and every cluster size.
    return shannon_c(1.0, cfg.power);
  }
  if (mc.n < 2) {
    throw std::invalid_argument("cluster_upper_bound: need at least 2 samples");
  }
  // Per-node power splits the budget M ways over independent unit-mean
  // links; the effective fade is the average of M exponentials.
  const auto m = static_cast<std::uint64_t>(spec.nodes);
  const double scale = cfg.power / static_cast<double>(m);
  McAccumulator acc;
  for (std::uint64_t i = 0; i < mc.n; ++i) {
    SampleRng rng(mc.seed, i);
    double sum = 0.0;
    for (std::uint64_t j = 0; j < m; ++j) sum += rng.exponential();
    acc.add(std::log1p(scale * sum) * std::numbers::log2e);
  }
  return acc.mean();
}

double gain_gap_vs_noncoop(const ClusterSpec& spec, const NetworkConfig& cfg,
                           const McConfig& mc) {
  double bound = cluster_upper_bound(spec, cfg, mc);
  double single = spec.fading == ClusterFading::QuasiStaticPhase
                      ? shannon_c(1.0, cfg.power)
                      : noncoop_ergodic(cfg, FadingMode::Exact);
  return bound - single;
}

}  // namespace relaycap

// Capacity ceiling of an M-node cluster holding the network's total power,
// compared with the single-link rate. Quantifies how much cooperation gain
// is even possible under each fading model.
#pragma once

#include "relaycap/core.hpp"
#include "relaycap/mc.hpp"

namespace relaycap {

enum class ClusterSide { Transmitter, Receiver };
enum class ClusterFading { QuasiStaticPhase, FastRayleigh };

struct ClusterSpec {
  int nodes = 2;  // M >= 1
  ClusterSide side = ClusterSide::Transmitter;
  ClusterFading fading = ClusterFading::QuasiStaticPhase;
};

// QuasiStaticPhase: exactly shannon_c(1, power) for either side and any M;
// unknown phases forbid coherent combining and the sum power is fixed.
// FastRayleigh: E[C(mean of M unit exponentials)] by Monte Carlo, identical
// for both sides; grows with M toward shannon_c(1, power) by hardening.
double cluster_upper_bound(const ClusterSpec& spec, const NetworkConfig& cfg,
                           const McConfig& mc = {});

// cluster_upper_bound minus the single-link rate under the same fading:
// exactly zero in the quasi-static phase model; under fast Rayleigh fading
// it grows with M from zero toward the Jensen penalty of a single
// exponential, shannon_c(1, power) - ergodic_c_single(1, power).
double gain_gap_vs_noncoop(const ClusterSpec& spec, const NetworkConfig& cfg,
                           const McConfig& mc = {});

}  // namespace relaycap

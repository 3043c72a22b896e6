// Ergodic rates under fast Rayleigh fading. Exact expectations reduce to the
// exponential integral; HiSnr mode evaluates the log(power) expansions whose
// constant terms the exact curves approach as power grows. The
// compress-and-forward rate has no closed form and is estimated by Monte
// Carlo.
#pragma once

#include <utility>

#include "relaycap/core.hpp"
#include "relaycap/mc.hpp"

namespace relaycap {

enum class FadingMode { Exact, HiSnr };

// E[log2(1 + a * power * X)] for X a unit-mean exponential. a >= 0.
double ergodic_c_single(double a, double power);

// E[log2(1 + power * (a X + b Y))] for X, Y iid unit-mean exponentials.
// Requires a, b >= 0 and a + b > 0; near-equal weights switch to the
// Gamma(2) closed form to avoid cancellation.
double ergodic_c_pair(double a, double b, double power);

// High-SNR expansions of the two transmit-cluster cut expectations at split
// alpha in (0, 1): {E[C(alpha(g Y2 + Y1))], E[C(alpha Y1 + (1-alpha) Y3)]}.
std::pair<double, double> hi_snr_tx_terms(double alpha, double gain,
                                          double power);

// Receive-cluster counterparts: {E[C(alpha(Y1 + Y2))],
// E[C(alpha Y1 + (1-alpha) g Y3)]}.
std::pair<double, double> hi_snr_rx_terms(double alpha, double gain,
                                          double power);

// Ergodic rate of the direct link alone.
double noncoop_ergodic(const NetworkConfig& cfg, FadingMode mode);

RateResult fading_tx_cutset(const PowerSplit& split, const NetworkConfig& cfg,
                            FadingMode mode);
RateResult fading_df_rate(const PowerSplit& split, const NetworkConfig& cfg,
                          FadingMode mode);
RateResult fading_rx_cutset(const PowerSplit& split, const NetworkConfig& cfg,
                            FadingMode mode);

// Two-phase compress-and-forward estimate at a fixed split: first the
// ergodic rate of the helper's description link fixes the quantization
// distortion, then the combined-output rate is averaged over the same
// sample stream. A distortion factor >= 1 disables the helper path.
McEstimate cf_fading_rate(double alpha, const NetworkConfig& cfg,
                          const McConfig& mc);

struct CfAlphaResult {
  double alpha_star = 0.0;
  McEstimate estimate;
};

// Scan of cf_fading_rate over the alpha grid {0, step, 2 step, ..., 1} with
// common random numbers. 1/step must be an integer.
CfAlphaResult optimize_cf_alpha(const NetworkConfig& cfg, const McConfig& mc,
                                double step = 0.01);

}  // namespace relaycap

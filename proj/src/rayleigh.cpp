#include "relaycap/rayleigh.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

#include "relaycap/exp_integral.hpp"
#include "relaycap/scalar_opt.hpp"

namespace relaycap {

namespace {

constexpr double kLog2E = std::numbers::log2e;
constexpr double kEulerGamma = std::numbers::egamma;

// Optimization domain for the high-SNR expressions, which diverge to -inf
// at the endpoints of the split range.
constexpr double kAlphaEdge = 1e-9;

// E[ln(1 + c X)], X unit-mean exponential: e^(1/c) E1(1/c) in nats.
// Series below c = 1e-4; the truncation error is O(6 c^4).
double mean_ln1p_exp(double c) {
  if (c == 0.0) return 0.0;
  if (c <= 1e-4) return c * (1.0 - c * (1.0 - 2.0 * c));
  return exp_integral_e1_scaled(1.0 / c);
}

// E[ln(1 + c Z)], Z ~ Gamma(2, 1): 1 + (1 - mu) e^mu E1(mu), mu = 1/c.
double mean_ln1p_gamma2(double c) {
  if (c == 0.0) return 0.0;
  if (c <= 1e-4) return c * (2.0 - c * (3.0 - 8.0 * c));
  double mu = 1.0 / c;
  return 1.0 + (1.0 - mu) * exp_integral_e1_scaled(mu);
}

// (1 + s) ln(1 + s) / s, continued by its limits at s = 0 and s = -1.
double xlog_kernel(double s) {
  if (s == 0.0) return 1.0;
  if (1.0 + s <= 0.0) return 0.0;
  return (1.0 + s) * std::log1p(s) / s;
}

// (b ln b - a ln a) / (b - a) for a, b >= 0, with its diagonal limit
// ln a + 1. The kernel form stays accurate when a and b nearly coincide.
double wlogw_slope(double a, double b) {
  if (a == b) return std::log(a) + 1.0;
  if (a == 0.0) return std::log(b);
  if (b == 0.0) return std::log(a);
  return std::log(a) + xlog_kernel(b / a - 1.0);
}

void require_unit_interval_interior(double alpha, const char* fn) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::domain_error(std::string(fn) +
                            ": requires alpha in (0, 1), got " +
                            std::to_string(alpha));
  }
}

Branch classify(double term1, double term2) {
  double scale = std::max(1.0, std::max(std::abs(term1), std::abs(term2)));
  if (std::abs(term1 - term2) <= 1e-9 * scale) return Branch::Balanced;
  return term1 < term2 ? Branch::BroadcastCut : Branch::MultipleAccessCut;
}

using TermFn = std::function<double(double)>;

// Shared max-min driver: the broadcast-side term rises from zero with
// alpha, the multiple-access-side term has a single interior peak, so the
// pointwise minimum is unimodal (with one possible kink at the crossing).
RateResult minmax_over_alpha(const PowerSplit& split, double lo, double hi,
                             const TermFn& term1, const TermFn& term2) {
  double alpha;
  if (split.mode() == SplitMode::Optimize) {
    auto q = [&](double a) { return std::min(term1(a), term2(a)); };
    alpha = maximize_grid_refine(q, lo, hi).argmax;
  } else {
    alpha = split.alpha();
  }
  double v1 = term1(alpha);
  double v2 = term2(alpha);
  RateResult r;
  r.rate = std::min(v1, v2);
  r.alpha_star = alpha;
  r.branch = classify(v1, v2);
  return r;
}

struct TermPair {
  TermFn term1, term2;
  double lo, hi;
};

TermPair tx_terms(const NetworkConfig& cfg, FadingMode mode) {
  const double g = cfg.gain;
  const double p = cfg.power;
  if (mode == FadingMode::Exact) {
    return {[g, p](double a) {
              return a == 0.0 ? 0.0 : ergodic_c_pair(a * g, a, p);
            },
            [p](double a) { return ergodic_c_pair(a, 1.0 - a, p); },
            0.0, 1.0};
  }
  return {[g, p](double a) { return hi_snr_tx_terms(a, g, p).first; },
          [g, p](double a) { return hi_snr_tx_terms(a, g, p).second; },
          kAlphaEdge, 1.0 - kAlphaEdge};
}

TermPair df_terms(const NetworkConfig& cfg, FadingMode mode) {
  const double g = cfg.gain;
  const double p = cfg.power;
  if (mode == FadingMode::Exact) {
    return {[g, p](double a) {
              return a == 0.0 ? 0.0 : ergodic_c_single(a * g, p);
            },
            [p](double a) { return ergodic_c_pair(a, 1.0 - a, p); },
            0.0, 1.0};
  }
  return {[g, p](double a) {
            require_unit_interval_interior(a, "fading_df_rate");
            return std::log2(p) + std::log2(a * g) - kEulerGamma * kLog2E;
          },
          [g, p](double a) { return hi_snr_tx_terms(a, g, p).second; },
          kAlphaEdge, 1.0 - kAlphaEdge};
}

TermPair rx_terms(const NetworkConfig& cfg, FadingMode mode) {
  const double g = cfg.gain;
  const double p = cfg.power;
  if (mode == FadingMode::Exact) {
    return {[p](double a) { return a == 0.0 ? 0.0 : ergodic_c_pair(a, a, p); },
            [g, p](double a) { return ergodic_c_pair(a, g * (1.0 - a), p); },
            0.0, 1.0};
  }
  return {[g, p](double a) { return hi_snr_rx_terms(a, g, p).first; },
          [g, p](double a) { return hi_snr_rx_terms(a, g, p).second; },
          kAlphaEdge, 1.0 - kAlphaEdge};
}

}  // namespace

double ergodic_c_single(double a, double power) {
  if (!(power > 0.0)) {
    throw std::domain_error("ergodic_c_single: power must be > 0");
  }
  if (!(a >= 0.0)) {
    throw std::domain_error("ergodic_c_single: weight must be >= 0, got " +
                            std::to_string(a));
  }
  if (a == 0.0) return 0.0;
  return kLog2E * mean_ln1p_exp(a * power);
}

double ergodic_c_pair(double a, double b, double power) {
  if (!(power > 0.0)) {
    throw std::domain_error("ergodic_c_pair: power must be > 0");
  }
  if (!(a >= 0.0) || !(b >= 0.0)) {
    throw std::domain_error("ergodic_c_pair: weights must be >= 0, got (" +
                            std::to_string(a) + ", " + std::to_string(b) + ")");
  }
  if (a == 0.0 && b == 0.0) {
    throw std::domain_error("ergodic_c_pair: weights must not both be zero");
  }
  if (a == 0.0) return ergodic_c_single(b, power);
  if (b == 0.0) return ergodic_c_single(a, power);
  // Partial fractions over the two exponential scales cancel badly when the
  // weights nearly coincide; switch to the Gamma(2) form at the midpoint.
  if (std::abs(a - b) <= 1e-5 * (a + b)) {
    return kLog2E * mean_ln1p_gamma2(0.5 * (a + b) * power);
  }
  double ta = a * mean_ln1p_exp(a * power);
  double tb = b * mean_ln1p_exp(b * power);
  return kLog2E * (ta - tb) / (a - b);
}

std::pair<double, double> hi_snr_tx_terms(double alpha, double gain,
                                          double power) {
  require_unit_interval_interior(alpha, "hi_snr_tx_terms");
  if (!(gain > 0.0) || !(power > 0.0)) {
    throw std::domain_error("hi_snr_tx_terms: gain and power must be > 0");
  }
  double logp = std::log2(power);
  double t1 = logp + std::log2(alpha) +
              kLog2E * (xlog_kernel(gain - 1.0) - kEulerGamma);
  double t2 =
      logp + kLog2E * (wlogw_slope(1.0 - alpha, alpha) - kEulerGamma);
  return {t1, t2};
}

std::pair<double, double> hi_snr_rx_terms(double alpha, double gain,
                                          double power) {
  require_unit_interval_interior(alpha, "hi_snr_rx_terms");
  if (!(gain > 0.0) || !(power > 0.0)) {
    throw std::domain_error("hi_snr_rx_terms: gain and power must be > 0");
  }
  double logp = std::log2(power);
  double t1 = logp + std::log2(alpha) + (1.0 - kEulerGamma) * kLog2E;
  double t2 = logp + kLog2E *
                         (wlogw_slope(alpha, gain * (1.0 - alpha)) -
                          kEulerGamma);
  return {t1, t2};
}

double noncoop_ergodic(const NetworkConfig& cfg, FadingMode mode) {
  if (mode == FadingMode::Exact) return ergodic_c_single(1.0, cfg.power);
  return std::log2(cfg.power) - kEulerGamma * kLog2E;
}

RateResult fading_tx_cutset(const PowerSplit& split, const NetworkConfig& cfg,
                            FadingMode mode) {
  TermPair t = tx_terms(cfg, mode);
  return minmax_over_alpha(split, t.lo, t.hi, t.term1, t.term2);
}

RateResult fading_df_rate(const PowerSplit& split, const NetworkConfig& cfg,
                          FadingMode mode) {
  TermPair t = df_terms(cfg, mode);
  return minmax_over_alpha(split, t.lo, t.hi, t.term1, t.term2);
}

RateResult fading_rx_cutset(const PowerSplit& split, const NetworkConfig& cfg,
                            FadingMode mode) {
  TermPair t = rx_terms(cfg, mode);
  return minmax_over_alpha(split, t.lo, t.hi, t.term1, t.term2);
}

McEstimate cf_fading_rate(double alpha, const NetworkConfig& cfg,
                          const McConfig& mc) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::domain_error("cf_fading_rate: alpha must lie in [0, 1], got " +
                            std::to_string(alpha));
  }
  if (mc.n < 2) {
    throw std::invalid_argument("cf_fading_rate: need at least 2 samples");
  }
  const double g = cfg.gain;
  const double p = cfg.power;

  // Ergodic rate of the helper's description link; its compression
  // distortion must leave room above the forwarded observation noise.
  McAccumulator desc;
  for (std::uint64_t i = 0; i < mc.n; ++i) {
    FadingSample s = draw_fading(mc.seed, i);
    double x = (1.0 - alpha) * g * s.gamma3 / (alpha * s.gamma1 * p + 1.0);
    desc.add(std::log1p(x * p) * kLog2E);
  }
  double distortion = std::exp2(-desc.mean());
  bool helper_on = distortion < 1.0;

  McAccumulator rate;
  for (std::uint64_t i = 0; i < mc.n; ++i) {
    FadingSample s = draw_fading(mc.seed, i);
    double boost = 0.0;
    if (helper_on) {
      double quant_noise =
          distortion / (1.0 - distortion) * (alpha * s.gamma2 * p + 1.0);
      boost = alpha * s.gamma2 / (1.0 + quant_noise);
    }
    rate.add(std::log1p((alpha * s.gamma1 + boost) * p) * kLog2E);
  }
  return rate.finish(mc.seed);
}

CfAlphaResult optimize_cf_alpha(const NetworkConfig& cfg, const McConfig& mc,
                                double step) {
  if (!(step > 0.0 && step <= 1.0)) {
    throw std::invalid_argument("optimize_cf_alpha: step must lie in (0, 1]");
  }
  auto k = static_cast<std::uint64_t>(std::llround(1.0 / step));
  if (k < 1 || std::abs(k * step - 1.0) > 1e-9) {
    throw std::invalid_argument(
        "optimize_cf_alpha: 1/step must be an integer");
  }

  CfAlphaResult best;
  bool first = true;
  for (std::uint64_t i = 0; i <= k; ++i) {
    double a = std::min(1.0, static_cast<double>(i) * step);
    McEstimate est = cf_fading_rate(a, cfg, mc);
    if (first || est.mean > best.estimate.mean) {
      best.alpha_star = a;
      best.estimate = est;
      first = false;
    }
  }
  return best;
}

}  // namespace relaycap

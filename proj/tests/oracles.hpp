// Test-side numerics, intentionally independent of the library internals:
// adaptive Simpson quadrature for every ergodic expectation (via the
// moment-generating-function identity E[ln(1+S)] = int_0^inf e^-t/t
// (1 - E[e^-tS]) dt) and brute-force grid optimization of the quasi-static
// max-min rate expressions.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace oracles {

inline constexpr double kLog2E = std::numbers::log2e;

namespace detail {

inline double simpson(double a, double fa, double fm, double fb, double b) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adapt(const std::function<double(double)>& f, double a,
                    double b, double fa, double fm, double fb, double whole,
                    double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  double flm = f(lm);
  double frm = f(rm);
  double left = simpson(a, fa, flm, fm, m);
  double right = simpson(m, fm, frm, fb, b);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

inline double integrate(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-12) {
  double m = 0.5 * (a + b);
  double fa = f(a);
  double fm = f(m);
  double fb = f(b);
  return detail::adapt(f, a, b, fa, fm, fb, detail::simpson(a, fa, fm, fb, b),
                       tol, 48);
}

// e^x E1(x) = int_0^inf e^-u / (u + x) du; the integrand decays like e^-u,
// so [0, 60] carries everything beyond double precision.
inline double e1_scaled(double x) {
  return integrate([x](double u) { return std::exp(-u) / (u + x); }, 0.0,
                   60.0);
}

inline double e1(double x) { return std::exp(-x) * e1_scaled(x); }

// E[log2(1 + a P X)], X a unit exponential, in bits.
inline double ergodic_single_bits(double a, double power) {
  if (a == 0.0) return 0.0;
  const double s = a * power;
  return kLog2E *
         integrate([s](double t) { return std::exp(-t) * s / (1.0 + t * s); },
                   0.0, 60.0);
}

// E[log2(1 + P(a X + b Y))] in bits; (1 - 1/(AB))/t is expanded so the
// integrand stays finite at t = 0.
inline double ergodic_pair_bits(double a, double b, double power) {
  const double sa = a * power;
  const double sb = b * power;
  auto f = [sa, sb](double t) {
    double denom = (1.0 + t * sa) * (1.0 + t * sb);
    return std::exp(-t) * (sa + sb + t * sa * sb) / denom;
  };
  return kLog2E * integrate(f, 0.0, 60.0);
}

// E[log2(1 + (P/M) sum of M unit exponentials)] in bits.
inline double ergodic_cluster_bits(int m, double power) {
  const double s = power / m;
  auto f = [m, s](double t) {
    if (t == 0.0) return static_cast<double>(m) * s;
    double y = m * std::log1p(t * s);
    return std::exp(-t) * (-std::expm1(-y)) / t;
  };
  return kLog2E * integrate(f, 0.0, 60.0);
}

// Plain ternary search; 200 shrink steps of 2/3 pin the argument to machine
// precision on unit-scale intervals.
inline double ternary_max_arg(const std::function<double(double)>& f,
                              double lo, double hi) {
  for (int i = 0; i < 200; ++i) {
    double m1 = lo + (hi - lo) / 3.0;
    double m2 = hi - (hi - lo) / 3.0;
    if (f(m1) < f(m2)) {
      lo = m1;
    } else {
      hi = m2;
    }
  }
  return 0.5 * (lo + hi);
}

enum class PhaseKind { TxCutset, DecodeForward, RxCutset };

// min of the two cut rates at a given split and correlation, written out
// directly from the rate expressions.
inline double phase_value(PhaseKind kind, double alpha, double rho, double g,
                          double power) {
  double broadcast = 0.0;
  double mac = 0.0;
  switch (kind) {
    case PhaseKind::TxCutset:
      broadcast = alpha * (g + 1.0) * (1.0 - rho * rho);
      mac = 1.0 + 2.0 * rho * std::sqrt(alpha * (1.0 - alpha));
      break;
    case PhaseKind::DecodeForward:
      broadcast = alpha * g * (1.0 - rho * rho);
      mac = 1.0 + 2.0 * rho * std::sqrt(alpha * (1.0 - alpha));
      break;
    case PhaseKind::RxCutset:
      broadcast = 2.0 * alpha * (1.0 - rho * rho);
      mac = alpha + (1.0 - alpha) * g +
            2.0 * rho * std::sqrt(alpha * (1.0 - alpha) * g);
      break;
  }
  return std::min(std::log2(1.0 + broadcast * power),
                  std::log2(1.0 + mac * power));
}

// max over rho: one cut falls and the other rises in rho, so the pointwise
// minimum is unimodal and ternary search suffices.
inline double phase_best_rho(PhaseKind kind, double alpha, double g,
                             double power, bool use_rho) {
  if (!use_rho) return phase_value(kind, alpha, 0.0, g, power);
  auto f = [&](double r) { return phase_value(kind, alpha, r, g, power); };
  double r_star = ternary_max_arg(f, 0.0, 1.0);
  return std::max(f(r_star), std::max(f(0.0), f(1.0)));
}

// Brute-force value of the max-min rate: 1001-point split grid, then
// ternary refinement inside the bracketing cells.
inline double phase_brute_force(PhaseKind kind, double g, double power,
                                bool optimize_alpha, bool use_rho) {
  if (!optimize_alpha) return phase_best_rho(kind, 0.5, g, power, use_rho);
  auto value = [&](double a) {
    return phase_best_rho(kind, a, g, power, use_rho);
  };
  const int n = 1001;
  double best = -1.0;
  int best_i = 0;
  for (int i = 0; i < n; ++i) {
    double a = static_cast<double>(i) / (n - 1);
    double v = value(a);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  double lo = std::max(0.0, (best_i - 1) / static_cast<double>(n - 1));
  double hi = std::min(1.0, (best_i + 1) / static_cast<double>(n - 1));
  double refined = value(ternary_max_arg(value, lo, hi));
  return std::max(best, refined);
}

// Compress-and-forward effective power, optionally without the
// quantization noise floor (the closed upper bound drops it).
inline double cf_brute_force(double g, double power, bool optimize_alpha,
                             bool drop_floor = false) {
  auto value = [&](double a) {
    double floor_term = drop_floor ? 0.0 : 1.0 / power;
    double denom = (1.0 - a) * g + 2.0 * a + floor_term;
    double arg = a * (1.0 - a) * g / denom + a;
    return std::log2(1.0 + arg * power);
  };
  if (!optimize_alpha) return value(0.5);
  const int n = 1001;
  double best = -1.0;
  int best_i = 0;
  for (int i = 0; i < n; ++i) {
    double a = static_cast<double>(i) / (n - 1);
    double v = value(a);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  double lo = std::max(0.0, (best_i - 1) / static_cast<double>(n - 1));
  double hi = std::min(1.0, (best_i + 1) / static_cast<double>(n - 1));
  double refined = value(ternary_max_arg(value, lo, hi));
  return std::max(best, refined);
}

}  // namespace oracles

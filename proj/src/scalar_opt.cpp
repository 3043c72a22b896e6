#include "relaycap/scalar_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace relaycap {

namespace {

constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5) - 1) / 2
constexpr int kMaxIterations = 200;

double checked(const std::function<double(double)>& f, double x) {
  double v = f(x);
  if (!std::isfinite(v)) {
    throw std::domain_error("scalar_opt: objective is not finite at x = " +
                            std::to_string(x));
  }
  return v;
}

}  // namespace

OptResult maximize_unimodal(const std::function<double(double)>& f,
                            double lo, double hi, double tol) {
  if (!(lo <= hi)) {
    throw std::invalid_argument("maximize_unimodal: requires lo <= hi");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("maximize_unimodal: requires tol > 0");
  }

  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = checked(f, c);
  double fd = checked(f, d);
  int it = 0;
  while (b - a > tol && it < kMaxIterations) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = checked(f, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = checked(f, d);
    }
    ++it;
  }

  OptResult r;
  r.argmax = 0.5 * (a + b);
  r.value = checked(f, r.argmax);
  // Keep the best probe seen; monotone objectives then land exactly on an
  // endpoint instead of a tol-sized step inside.
  for (double x : {c, d, lo, hi}) {
    double v = checked(f, x);
    if (v > r.value) {
      r.value = v;
      r.argmax = x;
    }
  }
  r.iterations = it;
  r.converged = (b - a) <= tol;
  return r;
}

OptResult solve_balance(const std::function<double(double)>& f,
                        const std::function<double(double)>& g,
                        double lo, double hi, double tol) {
  if (!(lo <= hi)) {
    throw std::invalid_argument("solve_balance: requires lo <= hi");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("solve_balance: requires tol > 0");
  }

  auto diff = [&](double x) { return checked(f, x) - checked(g, x); };
  auto min_of = [&](double x) { return std::min(checked(f, x), checked(g, x)); };

  OptResult r;
  double dlo = diff(lo);
  double dhi = diff(hi);
  if (dlo == 0.0 || dhi == 0.0) {
    r.argmax = (dlo == 0.0) ? lo : hi;
    r.value = min_of(r.argmax);
    r.converged = true;
    return r;
  }
  if ((dlo < 0.0) == (dhi < 0.0)) {
    // No crossing inside the bracket: pick the better endpoint.
    double mlo = min_of(lo);
    double mhi = min_of(hi);
    r.argmax = (mhi > mlo) ? hi : lo;
    r.value = std::max(mlo, mhi);
    r.converged = true;
    return r;
  }

  double a = lo;
  double b = hi;
  bool neg_at_a = dlo < 0.0;
  int it = 0;
  while (b - a > tol && it < kMaxIterations) {
    double m = 0.5 * (a + b);
    double dm = diff(m);
    if (dm == 0.0) {
      a = m;
      b = m;
      break;
    }
    if ((dm < 0.0) == neg_at_a) {
      a = m;
    } else {
      b = m;
    }
    ++it;
  }
  r.argmax = 0.5 * (a + b);
  r.value = min_of(r.argmax);
  r.iterations = it;
  r.converged = (b - a) <= tol;
  return r;
}

OptResult maximize_grid_refine(const std::function<double(double)>& f,
                               double lo, double hi, int grid_points,
                               double tol) {
  if (grid_points < 2) {
    throw std::invalid_argument("maximize_grid_refine: requires grid_points >= 2");
  }
  if (!(lo <= hi)) {
    throw std::invalid_argument("maximize_grid_refine: requires lo <= hi");
  }

  const double step = (hi - lo) / (grid_points - 1);
  double best_v = -std::numeric_limits<double>::infinity();
  int best_i = 0;
  for (int i = 0; i < grid_points; ++i) {
    double x = (i == grid_points - 1) ? hi : lo + step * i;
    double v = checked(f, x);
    if (v > best_v) {
      best_v = v;
      best_i = i;
    }
  }

  double a = std::max(lo, lo + step * (best_i - 1));
  double b = std::min(hi, lo + step * (best_i + 1));
  OptResult r = maximize_unimodal(f, a, b, tol);
  if (best_v > r.value) {
    r.value = best_v;
    r.argmax = (best_i == grid_points - 1) ? hi : lo + step * best_i;
  }
  return r;
}

}  // namespace relaycap

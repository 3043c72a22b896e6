#include "relaycap/exp_integral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace relaycap {

namespace {

// E1(x) = -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k * k!), for x <= 1.
// Terms fall off factorially; 40 terms overshoot double precision.
double e1_series(double x) {
  double sum = 0.0;
  double term = 1.0;  // (-x)^k / k!
  for (int k = 1; k <= 40; ++k) {
    term *= -x / k;
    double add = -term / k;
    sum += add;
    if (std::abs(add) < 1e-18 * std::abs(sum)) break;
  }
  return -std::numbers::egamma - std::log(x) + sum;
}

// Modified Lentz evaluation of the continued fraction
// e^x E1(x) = 1 / (x + 1 - 1/(x + 3 - 4/(x + 5 - 9/(...)))), for x >= 1.
double e1_cf_scaled(double x) {
  constexpr double kTiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int k = 1; k <= 300; ++k) {
    double a = -static_cast<double>(k) * k;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    if (c == 0.0) c = kTiny;
    double delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return h;
}

void require_positive(double x, const char* fn) {
  if (!(x > 0.0)) {
    throw std::domain_error(std::string(fn) + ": requires x > 0, got " +
                            std::to_string(x));
  }
}

}  // namespace

double exp_integral_e1(double x) {
  require_positive(x, "exp_integral_e1");
  if (x <= 1.0) return e1_series(x);
  return std::exp(-x) * e1_cf_scaled(x);
}

double exp_integral_e1_scaled(double x) {
  require_positive(x, "exp_integral_e1_scaled");
  if (x <= 1.0) return std::exp(x) * e1_series(x);
  return e1_cf_scaled(x);
}

}  // namespace relaycap

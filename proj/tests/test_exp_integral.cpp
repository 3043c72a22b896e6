#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "oracles.hpp"
#include "relaycap/exp_integral.hpp"

using relaycap::exp_integral_e1;
using relaycap::exp_integral_e1_scaled;

TEST_CASE("E1 matches 40-digit reference values") {
  CHECK(exp_integral_e1(0.05) ==
        doctest::Approx(2.4678984885099744).epsilon(1e-14));
  CHECK(exp_integral_e1(0.5) ==
        doctest::Approx(0.55977359477616081).epsilon(1e-14));
  CHECK(exp_integral_e1(1.0) ==
        doctest::Approx(0.21938393439552027).epsilon(1e-14));
  CHECK(exp_integral_e1(2.0) ==
        doctest::Approx(0.04890051070806112).epsilon(1e-13));
  CHECK(exp_integral_e1(10.0) ==
        doctest::Approx(4.1569689296853243e-6).epsilon(1e-13));
  CHECK(exp_integral_e1(50.0) ==
        doctest::Approx(3.783264029550459e-24).epsilon(1e-13));
  CHECK(exp_integral_e1_scaled(50.0) ==
        doctest::Approx(0.01961510993011487).epsilon(1e-13));
}

TEST_CASE("E1 agrees with quadrature across both branches") {
  for (double x : {0.05, 0.3, 0.999, 1.0, 1.001, 2.5, 7.0, 20.0, 120.0}) {
    CAPTURE(x);
    CHECK(exp_integral_e1_scaled(x) ==
          doctest::Approx(oracles::e1_scaled(x)).epsilon(1e-11));
  }
}

TEST_CASE("scaled and plain variants are consistent") {
  for (double x : {0.2, 0.9, 1.5, 6.0}) {
    CAPTURE(x);
    CHECK(exp_integral_e1_scaled(x) ==
          doctest::Approx(std::exp(x) * exp_integral_e1(x)).epsilon(1e-13));
  }
}

TEST_CASE("E1 is continuous at the series/continued-fraction switch") {
  double below = exp_integral_e1(1.0 - 1e-9);
  double above = exp_integral_e1(1.0 + 1e-9);
  CHECK(std::abs(below - above) < 1e-9);
}

TEST_CASE("E1 is monotone decreasing and asymptotically 1/(x e^x)") {
  double prev = std::numeric_limits<double>::infinity();
  for (double x : {0.01, 0.1, 1.0, 5.0, 30.0}) {
    double v = exp_integral_e1(x);
    CHECK(v < prev);
    CHECK(v > 0.0);
    prev = v;
  }
  double tail = 500.0 * exp_integral_e1_scaled(500.0);
  CHECK(tail > 0.99);
  CHECK(tail < 1.0);
}

TEST_CASE("E1 rejects non-positive arguments") {
  CHECK_THROWS_AS(exp_integral_e1(0.0), std::domain_error);
  CHECK_THROWS_AS(exp_integral_e1(-1.0), std::domain_error);
  CHECK_THROWS_AS(exp_integral_e1_scaled(0.0), std::domain_error);
}

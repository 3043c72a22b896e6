#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "relaycap/core.hpp"

using namespace relaycap;

TEST_CASE("shannon_c matches reference points") {
  CHECK(shannon_c(1.0, 20.0) == doctest::Approx(4.3923174227787603).epsilon(1e-14));
  CHECK(shannon_c(0.5, 20.0) == doctest::Approx(3.4594316186372973).epsilon(1e-14));
  CHECK(shannon_c(0.25, 20.0) == doctest::Approx(2.5849625007211562).epsilon(1e-14));
  CHECK(shannon_c(0.75, 20.0) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(shannon_c(0.0, 20.0) == 0.0);
  CHECK(shannon_c(3.0, 1.0) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("shannon_c is monotone in both arguments") {
  double prev = -1.0;
  for (double x : {0.0, 0.1, 0.5, 1.0, 4.0, 100.0}) {
    double v = shannon_c(x, 20.0);
    CHECK(v > prev);
    prev = v;
  }
  CHECK(shannon_c(1.0, 30.0) > shannon_c(1.0, 20.0));
}

TEST_CASE("shannon_c rejects bad inputs") {
  CHECK_THROWS_AS(shannon_c(-0.1, 20.0), std::domain_error);
  CHECK_THROWS_AS(shannon_c(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(shannon_c(1.0, -5.0), std::domain_error);
}

TEST_CASE("gain_from_distance follows the power law") {
  CHECK(gain_from_distance(0.5, 2.0) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(gain_from_distance(2.0, 2.0) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(gain_from_distance(1.0, 3.7) == doctest::Approx(1.0).epsilon(1e-14));
  // sqrt(1/2) at exponent 2 doubles the gain
  CHECK(gain_from_distance(0.70710678118654752, 2.0) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(gain_from_distance(0.0, 2.0), std::domain_error);
  CHECK_THROWS_AS(gain_from_distance(1.0, 0.0), std::domain_error);
}

TEST_CASE("NetworkConfig validates and round-trips distance") {
  NetworkConfig cfg = NetworkConfig::from_distance(0.4, 20.0, 2.0);
  CHECK(cfg.gain == doctest::Approx(6.25).epsilon(1e-14));
  CHECK(cfg.distance() == doctest::Approx(0.4).epsilon(1e-13));

  NetworkConfig cube = NetworkConfig::from_distance(1.3, 5.0, 3.0);
  CHECK(cube.distance() == doctest::Approx(1.3).epsilon(1e-13));

  CHECK_THROWS_AS(NetworkConfig(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(NetworkConfig(20.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(NetworkConfig(20.0, 1.0, -2.0), std::domain_error);
}

TEST_CASE("PowerSplit modes") {
  CHECK(PowerSplit::equal().mode() == SplitMode::Equal);
  CHECK(PowerSplit::equal().alpha() == 0.5);
  CHECK(PowerSplit::fixed(0.5).alpha() == PowerSplit::equal().alpha());
  CHECK(PowerSplit::fixed(0.3).alpha() == 0.3);
  CHECK(PowerSplit::fixed(0.0).alpha() == 0.0);
  CHECK(PowerSplit::fixed(1.0).alpha() == 1.0);
  CHECK_THROWS_AS(PowerSplit::fixed(-0.1), std::domain_error);
  CHECK_THROWS_AS(PowerSplit::fixed(1.1), std::domain_error);
  CHECK_THROWS_AS(PowerSplit::optimize().alpha(), std::logic_error);
}

TEST_CASE("RateResult defaults leave the optional fields empty") {
  RateResult r;
  CHECK_FALSE(r.rho_star.has_value());
  CHECK_FALSE(r.alpha_interval.has_value());
}

TEST_CASE("Branch names") {
  CHECK(to_string(Branch::MultipleAccessCut) == "multiple_access_cut");
  CHECK(to_string(Branch::BroadcastCut) == "broadcast_cut");
  CHECK(to_string(Branch::Balanced) == "balanced");
}

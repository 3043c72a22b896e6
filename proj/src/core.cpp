#include "relaycap/core.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace relaycap {

double shannon_c(double x, double power) {
  if (!(x >= 0.0)) {
    throw std::domain_error("shannon_c: effective power fraction must be >= 0, got " +
                            std::to_string(x));
  }
  if (!(power > 0.0)) {
    throw std::domain_error("shannon_c: power must be > 0, got " +
                            std::to_string(power));
  }
  return std::log1p(x * power) * std::numbers::log2e;
}

double gain_from_distance(double distance, double exponent) {
  if (!(distance > 0.0)) {
    throw std::domain_error("gain_from_distance: distance must be > 0, got " +
                            std::to_string(distance));
  }
  if (!(exponent > 0.0)) {
    throw std::domain_error("gain_from_distance: exponent must be > 0, got " +
                            std::to_string(exponent));
  }
  return std::pow(distance, -exponent);
}

NetworkConfig::NetworkConfig(double power_, double gain_, double exponent_)
    : power(power_), gain(gain_), pathloss_exponent(exponent_) {
  if (!(power > 0.0)) {
    throw std::domain_error("NetworkConfig: power must be > 0, got " +
                            std::to_string(power));
  }
  if (!(gain > 0.0)) {
    throw std::domain_error("NetworkConfig: gain must be > 0, got " +
                            std::to_string(gain));
  }
  if (!(pathloss_exponent > 0.0)) {
    throw std::domain_error("NetworkConfig: path-loss exponent must be > 0, got " +
                            std::to_string(pathloss_exponent));
  }
}

NetworkConfig NetworkConfig::from_distance(double distance, double power,
                                           double exponent) {
  return NetworkConfig(power, gain_from_distance(distance, exponent), exponent);
}

double NetworkConfig::distance() const {
  return std::pow(gain, -1.0 / pathloss_exponent);
}

PowerSplit PowerSplit::fixed(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::domain_error("PowerSplit::fixed: alpha must lie in [0, 1], got " +
                            std::to_string(alpha));
  }
  return PowerSplit(SplitMode::Fixed, alpha);
}

double PowerSplit::alpha() const {
  if (mode_ == SplitMode::Optimize) {
    throw std::logic_error("PowerSplit::alpha: no fixed split in Optimize mode");
  }
  return alpha_;
}

std::string to_string(Branch b) {
  switch (b) {
    case Branch::MultipleAccessCut:
      return "multiple_access_cut";
    case Branch::BroadcastCut:
      return "broadcast_cut";
    case Branch::Balanced:
      return "balanced";
  }
  return "unknown";
}

}  // namespace relaycap

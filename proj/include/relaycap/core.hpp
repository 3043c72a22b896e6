// Core quantities shared by every bound evaluator: the rate of a unit-noise
// AWGN link, distance-to-gain conversion under power-law path loss, and the
// small configuration/result types.
#pragma once

#include <optional>
#include <string>
#include <utility>

namespace relaycap {

// Rate in bits per channel use of a unit-noise AWGN channel whose receiver
// sees effective power x * power: log2(1 + x * power).
// Requires x >= 0 and power > 0.
double shannon_c(double x, double power);

// Power gain of a link of length `distance` under path loss g = d^(-exponent).
// Requires distance > 0 and exponent > 0.
double gain_from_distance(double distance, double exponent);

struct NetworkConfig {
  double power = 20.0;            // per-node transmit power, unit noise
  double gain = 1.0;              // power gain g of the intra-cluster link
  double pathloss_exponent = 2.0;

  NetworkConfig() = default;
  NetworkConfig(double power_, double gain_, double exponent_ = 2.0);

  static NetworkConfig from_distance(double distance, double power,
                                     double exponent = 2.0);

  // Inverse of gain_from_distance for the stored gain and exponent.
  double distance() const;
};

enum class SplitMode { Equal, Optimize, Fixed };

// Source/helper power split: the source keeps fraction alpha of the power
// budget, the helper gets 1 - alpha. Equal is exactly Fixed(0.5).
class PowerSplit {
 public:
  static PowerSplit equal() { return PowerSplit(SplitMode::Equal, 0.5); }
  static PowerSplit optimize() {
    return PowerSplit(SplitMode::Optimize, 0.5);
  }
  static PowerSplit fixed(double alpha);

  SplitMode mode() const { return mode_; }

  // The split fraction; meaningless in Optimize mode (throws).
  double alpha() const;

 private:
  PowerSplit(SplitMode m, double a) : mode_(m), alpha_(a) {}

  SplitMode mode_;
  double alpha_;
};

// Which cut of the max-min expression is active at the reported optimum.
enum class Branch { MultipleAccessCut, BroadcastCut, Balanced };

std::string to_string(Branch b);

// One evaluated bound or rate. rho_star is empty where input correlation is
// not part of the expression (compress-and-forward, ergodic fading bounds).
// When a whole interval of splits is optimal, alpha_interval holds it and
// alpha_star is its lower endpoint.
struct RateResult {
  double rate = 0.0;
  double alpha_star = 0.5;
  std::optional<double> rho_star;
  Branch branch = Branch::MultipleAccessCut;
  std::optional<std::pair<double, double>> alpha_interval;
};

}  // namespace relaycap

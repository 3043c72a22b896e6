// Rate-versus-distance sweeps over the helper-link length, emitted as CSV.
// Monte Carlo cells get one derived seed per row, so tables are
// bit-identical across runs and thread counts.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace relaycap {

enum class SweepScenario {
  Case1,            // optimal power, full CSI (quasi-static phase)
  Case2,            // equal power, full CSI
  Case3,            // optimal power, receiver CSI
  Case4,            // equal power, receiver CSI
  RayleighEqual,    // fast fading, equal power: high-SNR curves + CF by MC
  RayleighOptimal,  // fast fading, split optimized per row
};

enum class GridSpacing { Linear, Log };

struct SweepSpec {
  SweepScenario scenario = SweepScenario::Case1;
  double d_min = 0.2;
  double d_max = 1.5;
  int points = 131;
  GridSpacing spacing = GridSpacing::Linear;
  double power = 20.0;
  double pathloss_exponent = 2.0;
  std::uint64_t mc_n = 100000;  // per Monte Carlo cell
  std::uint64_t mc_seed = 1;
  int threads = 1;
};

struct SweepTable {
  std::vector<std::string> header;
  // One row per distance, aligned with header; empty cells stay unset.
  std::vector<std::vector<std::optional<double>>> rows;
};

SweepTable run_sweep(const SweepSpec& spec);

// Comma-separated, header line first, 9 significant digits, empty string
// for absent cells.
std::string to_csv(const SweepTable& table);

}  // namespace relaycap

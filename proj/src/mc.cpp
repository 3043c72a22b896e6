#include "relaycap/mc.hpp"

#include <cmath>

namespace relaycap {

namespace {

constexpr std::uint64_t kGolden64 = 0x9E3779B97F4A7C15ULL;

// splitmix64 finalizer
std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  return mix64(seed ^ mix64(salt * kGolden64 + 0x6A09E667F3BCC909ULL));
}

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t index)
    : state_(mix64(seed + kGolden64 * (index + 1))) {}

double SampleRng::uniform() {
  state_ += kGolden64;
  std::uint64_t z = mix64(state_);
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

double SampleRng::exponential() {
  // -log(1 - u) stays finite: u < 1 by construction.
  return -std::log1p(-uniform());
}

FadingSample draw_fading(std::uint64_t seed, std::uint64_t index) {
  SampleRng rng(seed, index);
  FadingSample s;
  s.gamma1 = rng.exponential();
  s.gamma2 = rng.exponential();
  s.gamma3 = rng.exponential();
  return s;
}

void McAccumulator::add(double x) {
  ++n_;
  double d = x - mean_;
  mean_ += d / static_cast<double>(n_);
  m2_ += d * (x - mean_);
}

McEstimate McAccumulator::finish(std::uint64_t seed) const {
  McEstimate e;
  e.mean = mean_;
  e.n = n_;
  e.seed = seed;
  if (n_ > 1) {
    double var = m2_ / static_cast<double>(n_ - 1);
    e.std_err = std::sqrt(var / static_cast<double>(n_));
  }
  return e;
}

}  // namespace relaycap

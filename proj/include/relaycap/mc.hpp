// Monte Carlo engine for the fast-fading rates. Every random draw is a pure
// function of (seed, sample index), so estimates are bit-reproducible under
// any scheduling or parallel split of the index range.
#pragma once

#include <cstdint>

namespace relaycap {

struct McConfig {
  std::uint64_t n = 100000;  // samples per estimate, must be >= 2
  std::uint64_t seed = 1;
};

struct McEstimate {
  double mean = 0.0;
  double std_err = 0.0;  // sample standard deviation / sqrt(n)
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
};

// Counter-based splitmix64 stream keyed by (seed, index).
class SampleRng {
 public:
  SampleRng(std::uint64_t seed, std::uint64_t index);

  double uniform();      // [0, 1), 53 random bits
  double exponential();  // mean 1, inverse CDF; finite for every draw

 private:
  std::uint64_t state_;
};

// Squared channel magnitudes of one fading realization, unit mean each.
// gamma1: direct source-destination link; gamma2, gamma3: the two links the
// helper participates in.
struct FadingSample {
  double gamma1;
  double gamma2;
  double gamma3;
};

FadingSample draw_fading(std::uint64_t seed, std::uint64_t index);

// Derives an independent stream seed, e.g. one per sweep row.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

// Streaming mean and standard error (Welford). Deterministic for a fixed
// insertion order.
class McAccumulator {
 public:
  void add(double x);
  double mean() const { return mean_; }
  std::uint64_t count() const { return n_; }
  McEstimate finish(std::uint64_t seed) const;

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

}  // namespace relaycap

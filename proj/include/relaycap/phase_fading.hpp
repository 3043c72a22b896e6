// Quasi-static phase fading: cut-set bounds and decode-/compress-and-forward
// achievable rates for transmitter-side and receiver-side cooperation, the
// four CSI/power-allocation cases, and the fixed-gain rate ordering.
//
// All rates are in bits per channel use. `use_rho` selects whether the
// transmitters may correlate their inputs (full CSI); with receiver-only CSI
// the correlation coefficient is pinned to zero.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "relaycap/core.hpp"

namespace relaycap {

// Upper bound when the source and helper form a transmit cluster.
RateResult tx_cutset(const PowerSplit& split, const NetworkConfig& cfg,
                     bool use_rho = true);

// Decode-and-forward rate for the transmit cluster.
RateResult df_rate(const PowerSplit& split, const NetworkConfig& cfg,
                   bool use_rho = true);

// Upper bound when the destination and helper form a receive cluster.
RateResult rx_cutset(const PowerSplit& split, const NetworkConfig& cfg,
                     bool use_rho = true);

// Compress-and-forward rate for the receive cluster. Input correlation does
// not appear in this expression, so there is no use_rho switch.
RateResult cf_rate(const PowerSplit& split, const NetworkConfig& cfg);

// Closed-form upper bound on the split-optimized compress-and-forward rate,
// obtained by dropping the quantization noise floor. Requires gain > 2.
RateResult cf_rate_upper_bound(const NetworkConfig& cfg);

struct CaseId {
  bool full_csi = true;      // transmitters know the phases (rho free)
  bool optimal_power = true; // split optimized rather than fixed at 1/2

  // 1: optimal power, full CSI; 2: equal power, full CSI;
  // 3: optimal power, receiver CSI; 4: equal power, receiver CSI.
  static CaseId from_number(int n);
  int number() const;
};

struct PhaseFadingRates {
  CaseId case_id;
  RateResult ct;  // transmit-cluster cut-set bound
  RateResult rt;  // decode-and-forward
  RateResult cr;  // receive-cluster cut-set bound
  RateResult rr;  // compress-and-forward
  std::optional<RateResult> rr_upper;  // only when gain > 2
  double cn = 0.0;                     // non-cooperative rate
};

// Evaluates all four curves of one case with the general numeric
// optimizers, honoring the case's power and CSI policy.
PhaseFadingRates case_rates(CaseId id, const NetworkConfig& cfg);

// Same quantities from the per-case closed forms (compress-and-forward under
// optimal power has no closed form and stays numeric). Exact optimizers
// rho_star / alpha_star / alpha_interval are filled in where known.
PhaseFadingRates case_rates_closed_form(CaseId id, const NetworkConfig& cfg);

struct OrderedRate {
  std::string label;
  double rate;
};

struct OrderingResult {
  std::vector<OrderedRate> rows;  // listed from largest to smallest
  bool non_increasing = false;
};

// The seven fixed-gain rates that admit a universal ordering for gain > 2,
// from the cut-set bound down to equal-power compress-and-forward.
OrderingResult rate_ordering(const NetworkConfig& cfg);

// First adjacent pair breaking the non-increasing order, if any.
std::optional<std::pair<std::size_t, std::size_t>> ordering_violation(
    const std::vector<OrderedRate>& rows);

}  // namespace relaycap

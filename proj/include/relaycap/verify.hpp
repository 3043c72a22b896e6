// Self-verification of the library against independent numerics: closed
// forms versus brute-force optimization, rate orderings, structural
// identities, formula-branch boundaries, high-SNR convergence, Monte Carlo
// soundness, and reproducibility.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace relaycap {

struct CheckResult {
  std::string name;
  bool pass = false;
  double worst_deviation = 0.0;
  std::string location;  // grid point or parameter set of the worst deviation
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

struct VerifyOptions {
  std::uint64_t mc_n = 100000;
  std::uint64_t seed = 1;
};

// Individual checks. Each returns pass/fail with the worst deviation seen
// and where it occurred.
CheckResult check_closed_form_fidelity();
CheckResult check_rate_ordering();
CheckResult check_reference_values();
CheckResult check_shift_identity();
CheckResult check_branch_boundaries();
CheckResult check_bound_dominance();
CheckResult check_hi_snr_agreement();
CheckResult check_mc_soundness(const VerifyOptions& opts);
CheckResult check_no_gain_equal_power_csir();
CheckResult check_cluster_gap(const VerifyOptions& opts);
CheckResult check_determinism(const VerifyOptions& opts);

VerificationReport verify_all(const VerifyOptions& opts = {});

std::string report_to_json(const VerificationReport& report);

// Bisection utilities for locating formula-branch boundaries in the gain.
// locate_sign_change expects diff to change sign across [lo, hi];
// locate_tangent_contact finds where a one-sided difference flattens out,
// by bisecting a central-difference derivative.
double locate_sign_change(const std::function<double(double)>& diff,
                          double lo, double hi, double tol = 1e-9);
double locate_tangent_contact(const std::function<double(double)>& diff,
                              double lo, double hi, double tol = 1e-9);

}  // namespace relaycap

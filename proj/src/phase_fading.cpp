#include "relaycap/phase_fading.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "relaycap/scalar_opt.hpp"

namespace relaycap {

namespace {

Branch classify(double term1, double term2) {
  double scale = std::max(1.0, std::max(std::abs(term1), std::abs(term2)));
  if (std::abs(term1 - term2) <= 1e-9 * scale) return Branch::Balanced;
  return term1 < term2 ? Branch::BroadcastCut : Branch::MultipleAccessCut;
}

// Effective-power arguments of the two cuts as functions of the input
// correlation rho at a fixed split. The broadcast argument decreases in
// rho, the multiple-access argument increases.
struct CutArgs {
  std::function<double(double)> broadcast;
  std::function<double(double)> mac;
};

CutArgs tx_cut_args(double alpha, const NetworkConfig& cfg) {
  const double g = cfg.gain;
  return {[alpha, g](double r) { return alpha * (g + 1.0) * (1.0 - r * r); },
          [alpha](double r) {
            return 1.0 + 2.0 * r * std::sqrt(alpha * (1.0 - alpha));
          }};
}

CutArgs df_cut_args(double alpha, const NetworkConfig& cfg) {
  const double g = cfg.gain;
  return {[alpha, g](double r) { return alpha * g * (1.0 - r * r); },
          [alpha](double r) {
            return 1.0 + 2.0 * r * std::sqrt(alpha * (1.0 - alpha));
          }};
}

CutArgs rx_cut_args(double alpha, const NetworkConfig& cfg) {
  const double g = cfg.gain;
  return {[alpha](double r) { return 2.0 * alpha * (1.0 - r * r); },
          [alpha, g](double r) {
            return alpha + (1.0 - alpha) * g +
                   2.0 * r * std::sqrt(alpha * (1.0 - alpha) * g);
          }};
}

// max over rho in [0, 1] of min{C(broadcast), C(mac)}. The optimum sits at
// rho = 0 when the broadcast cut already binds there; otherwise the two
// cuts cross (the broadcast argument hits zero at rho = 1) and the balance
// point is optimal.
RateResult best_over_rho(const CutArgs& cuts, const NetworkConfig& cfg,
                         bool use_rho) {
  auto t1 = [&](double r) { return shannon_c(cuts.broadcast(r), cfg.power); };
  auto t2 = [&](double r) { return shannon_c(cuts.mac(r), cfg.power); };
  RateResult res;
  if (!use_rho || t1(0.0) <= t2(0.0)) {
    double v1 = t1(0.0);
    double v2 = t2(0.0);
    res.rate = std::min(v1, v2);
    res.rho_star = 0.0;
    res.branch = classify(v1, v2);
    return res;
  }
  OptResult bal = solve_balance(t1, t2, 0.0, 1.0, 1e-12);
  res.rate = bal.value;
  res.rho_star = bal.argmax;
  res.branch = classify(t1(bal.argmax), t2(bal.argmax));
  return res;
}

using ArgMaker = CutArgs (*)(double, const NetworkConfig&);

RateResult eval_minmax(const PowerSplit& split, const NetworkConfig& cfg,
                       bool use_rho, ArgMaker maker) {
  double alpha;
  if (split.mode() == SplitMode::Optimize) {
    auto value_at = [&](double a) {
      return best_over_rho(maker(a, cfg), cfg, use_rho).rate;
    };
    alpha = maximize_grid_refine(value_at, 0.0, 1.0).argmax;
  } else {
    alpha = split.alpha();
  }
  RateResult r = best_over_rho(maker(alpha, cfg), cfg, use_rho);
  r.alpha_star = alpha;
  return r;
}

RateResult make_closed(double rate, double alpha, Branch branch,
                       std::optional<double> rho = std::nullopt) {
  RateResult r;
  r.rate = rate;
  r.alpha_star = alpha;
  r.rho_star = rho;
  r.branch = branch;
  return r;
}

}  // namespace

RateResult tx_cutset(const PowerSplit& split, const NetworkConfig& cfg,
                     bool use_rho) {
  return eval_minmax(split, cfg, use_rho, &tx_cut_args);
}

RateResult df_rate(const PowerSplit& split, const NetworkConfig& cfg,
                   bool use_rho) {
  return eval_minmax(split, cfg, use_rho, &df_cut_args);
}

RateResult rx_cutset(const PowerSplit& split, const NetworkConfig& cfg,
                     bool use_rho) {
  return eval_minmax(split, cfg, use_rho, &rx_cut_args);
}

RateResult cf_rate(const PowerSplit& split, const NetworkConfig& cfg) {
  const double g = cfg.gain;
  const double p = cfg.power;
  // Effective receive power after combining the direct observation with the
  // helper's compressed one; the 1/p term is the quantization noise floor.
  auto arg = [g, p](double a) {
    double denom = (1.0 - a) * g + 2.0 * a + 1.0 / p;
    return a * (1.0 - a) * g / denom + a;
  };
  auto val = [&](double a) { return shannon_c(arg(a), p); };

  RateResult r;
  r.branch = Branch::MultipleAccessCut;
  if (split.mode() == SplitMode::Optimize) {
    OptResult opt = maximize_grid_refine(val, 0.0, 1.0);
    r.rate = opt.value;
    r.alpha_star = opt.argmax;
  } else {
    r.alpha_star = split.alpha();
    r.rate = val(r.alpha_star);
  }
  return r;
}

RateResult cf_rate_upper_bound(const NetworkConfig& cfg) {
  const double g = cfg.gain;
  if (!(g > 2.0)) {
    throw std::domain_error("cf_rate_upper_bound: requires gain > 2, got " +
                            std::to_string(g));
  }
  double root = std::sqrt(g - 1.0);
  double arg = 2.0 * g * (root - 1.0) * (root - 1.0) / ((g - 2.0) * (g - 2.0));
  RateResult r = make_closed(shannon_c(arg, cfg.power),
                             g * (g - 1.0 - root) / ((g - 1.0) * (g - 2.0)),
                             Branch::MultipleAccessCut);
  return r;
}

CaseId CaseId::from_number(int n) {
  switch (n) {
    case 1:
      return {true, true};
    case 2:
      return {true, false};
    case 3:
      return {false, true};
    case 4:
      return {false, false};
    default:
      throw std::domain_error("CaseId: case number must be 1..4, got " +
                              std::to_string(n));
  }
}

int CaseId::number() const {
  if (full_csi) return optimal_power ? 1 : 2;
  return optimal_power ? 3 : 4;
}

PhaseFadingRates case_rates(CaseId id, const NetworkConfig& cfg) {
  PowerSplit split =
      id.optimal_power ? PowerSplit::optimize() : PowerSplit::equal();
  PhaseFadingRates out;
  out.case_id = id;
  out.ct = tx_cutset(split, cfg, id.full_csi);
  out.rt = df_rate(split, cfg, id.full_csi);
  out.cr = rx_cutset(split, cfg, id.full_csi);
  out.rr = cf_rate(split, cfg);
  if (cfg.gain > 2.0) out.rr_upper = cf_rate_upper_bound(cfg);
  out.cn = shannon_c(1.0, cfg.power);
  return out;
}

PhaseFadingRates case_rates_closed_form(CaseId id, const NetworkConfig& cfg) {
  const double g = cfg.gain;
  const double p = cfg.power;
  auto c = [p](double x) { return shannon_c(x, p); };

  PhaseFadingRates out;
  out.case_id = id;
  out.cn = c(1.0);
  if (g > 2.0) out.rr_upper = cf_rate_upper_bound(cfg);

  if (id.full_csi && id.optimal_power) {
    out.ct = make_closed(c(2.0 * (g + 1.0) / (g + 2.0)),
                         (g + 4.0) / (2.0 * g + 4.0), Branch::Balanced,
                         std::sqrt(g / (g + 4.0)));
    if (g >= 1.0) {
      out.rt = make_closed(c(2.0 * g / (g + 1.0)),
                           (g + 3.0) / (2.0 * g + 2.0), Branch::Balanced,
                           std::sqrt((g - 1.0) / (g + 3.0)));
    } else {
      out.rt = make_closed(c(g), 1.0, Branch::BroadcastCut, 0.0);
    }
    double q = g * g + 2.0 * g + 2.0;
    out.cr = make_closed(c(2.0 * (g + 1.0) / (g + 2.0)),
                         q / (q + g), Branch::Balanced,
                         1.0 / std::sqrt(q));
    out.rr = cf_rate(PowerSplit::optimize(), cfg);
  } else if (id.full_csi && !id.optimal_power) {
    if (g >= 1.0) {
      out.ct = make_closed(c(2.0 * g / (g + 1.0)), 0.5, Branch::Balanced,
                           (g - 1.0) / (g + 1.0));
    } else {
      out.ct = make_closed(c(0.5 * (1.0 + g)), 0.5, Branch::BroadcastCut, 0.0);
    }
    if (g >= 2.0) {
      out.rt = make_closed(c(2.0 * (g - 1.0) / g), 0.5, Branch::Balanced,
                           (g - 2.0) / g);
    } else {
      out.rt = make_closed(c(0.5 * g), 0.5, Branch::BroadcastCut, 0.0);
    }
    if (g >= 1.0) {
      out.cr = make_closed(c(1.0), 0.5,
                           g == 1.0 ? Branch::Balanced : Branch::BroadcastCut,
                           0.0);
    } else {
      double rho = 0.5 * (std::sqrt(2.0 - g) - std::sqrt(g));
      out.cr = make_closed(c(0.5 * (1.0 + std::sqrt(g * (2.0 - g)))), 0.5,
                           Branch::Balanced, rho);
    }
    out.rr = make_closed(c(g / (2.0 * (g + 2.0 + 2.0 / p)) + 0.5), 0.5,
                         Branch::MultipleAccessCut);
  } else if (!id.full_csi && id.optimal_power) {
    out.ct = make_closed(c(1.0), 1.0 / (g + 1.0), Branch::Balanced, 0.0);
    out.ct.alpha_interval = {1.0 / (g + 1.0), 1.0};
    if (g >= 1.0) {
      out.rt = make_closed(c(1.0), 1.0 / g, Branch::Balanced, 0.0);
      out.rt.alpha_interval = {1.0 / g, 1.0};
    } else {
      out.rt = make_closed(c(g), 1.0, Branch::BroadcastCut, 0.0);
    }
    if (g > 1.0) {
      out.cr = make_closed(c(2.0 * g / (g + 1.0)), g / (g + 1.0),
                           Branch::Balanced, 0.0);
    } else if (g < 1.0) {
      out.cr = make_closed(c(1.0), 1.0, Branch::MultipleAccessCut, 0.0);
    } else {
      out.cr = make_closed(c(1.0), 0.5, Branch::Balanced, 0.0);
      out.cr.alpha_interval = {0.5, 1.0};
    }
    out.rr = cf_rate(PowerSplit::optimize(), cfg);
  } else {
    if (g >= 1.0) {
      out.ct = make_closed(c(1.0), 0.5,
                           g == 1.0 ? Branch::Balanced
                                    : Branch::MultipleAccessCut,
                           0.0);
    } else {
      out.ct = make_closed(c(0.5 * (1.0 + g)), 0.5, Branch::BroadcastCut, 0.0);
    }
    if (g >= 2.0) {
      out.rt = make_closed(c(1.0), 0.5,
                           g == 2.0 ? Branch::Balanced
                                    : Branch::MultipleAccessCut,
                           0.0);
    } else {
      out.rt = make_closed(c(0.5 * g), 0.5, Branch::BroadcastCut, 0.0);
    }
    if (g >= 1.0) {
      out.cr = make_closed(c(1.0), 0.5,
                           g == 1.0 ? Branch::Balanced : Branch::BroadcastCut,
                           0.0);
    } else {
      out.cr = make_closed(c(0.5 * (1.0 + g)), 0.5,
                           Branch::MultipleAccessCut, 0.0);
    }
    out.rr = make_closed(c(g / (2.0 * (g + 2.0 + 2.0 / p)) + 0.5), 0.5,
                         Branch::MultipleAccessCut);
  }
  return out;
}

OrderingResult rate_ordering(const NetworkConfig& cfg) {
  const double g = cfg.gain;
  if (!(g > 2.0)) {
    throw std::domain_error("rate_ordering: requires gain > 2, got " +
                            std::to_string(g));
  }
  const double p = cfg.power;
  auto c = [p](double x) { return shannon_c(x, p); };

  OrderingResult res;
  res.rows = {
      {"cutset_optimal", c(2.0 * (g + 1.0) / (g + 2.0))},
      {"df_optimal", c(2.0 * g / (g + 1.0))},
      {"df_equal", c(2.0 * (g - 1.0) / g)},
      {"cf_upper_bound", cf_rate_upper_bound(cfg).rate},
      {"cf_optimal", cf_rate(PowerSplit::optimize(), cfg).rate},
      {"noncoop", c(1.0)},
      {"cf_equal", c(g / (2.0 * (g + 2.0 + 2.0 / p)) + 0.5)},
  };
  res.non_increasing = !ordering_violation(res.rows).has_value();
  return res;
}

std::optional<std::pair<std::size_t, std::size_t>> ordering_violation(
    const std::vector<OrderedRate>& rows) {
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    if (rows[i + 1].rate > rows[i].rate) return std::make_pair(i, i + 1);
  }
  return std::nullopt;
}

}  // namespace relaycap

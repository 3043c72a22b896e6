#include "relaycap/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "relaycap/core.hpp"
#include "relaycap/phase_fading.hpp"
#include "relaycap/rayleigh.hpp"

namespace relaycap {

namespace {

std::vector<std::string> header_for(SweepScenario s) {
  switch (s) {
    case SweepScenario::Case1:
    case SweepScenario::Case3:
      return {"d", "g", "ct", "rt", "cr", "rr", "rr_upper", "cn"};
    case SweepScenario::Case2:
    case SweepScenario::Case4:
      return {"d", "g", "ct", "rt", "cr", "rr", "cn"};
    case SweepScenario::RayleighEqual:
      return {"d", "g", "ct", "rt", "cr", "rr_mc", "rr_stderr", "cn"};
    case SweepScenario::RayleighOptimal:
      return {"d", "g", "ct", "rt", "cr", "rr_mc", "rr_stderr", "rr_alpha",
              "cn"};
  }
  throw std::logic_error("header_for: unknown scenario");
}

int phase_case_number(SweepScenario s) {
  switch (s) {
    case SweepScenario::Case1:
      return 1;
    case SweepScenario::Case2:
      return 2;
    case SweepScenario::Case3:
      return 3;
    case SweepScenario::Case4:
      return 4;
    default:
      return 0;
  }
}

double grid_point(const SweepSpec& spec, int i) {
  if (spec.points == 1) return spec.d_min;
  double t = static_cast<double>(i) / (spec.points - 1);
  if (spec.spacing == GridSpacing::Linear) {
    return spec.d_min + (spec.d_max - spec.d_min) * t;
  }
  return spec.d_min * std::pow(spec.d_max / spec.d_min, t);
}

using Row = std::vector<std::optional<double>>;

Row compute_row(const SweepSpec& spec, int i) {
  const double d = grid_point(spec, i);
  NetworkConfig cfg =
      NetworkConfig::from_distance(d, spec.power, spec.pathloss_exponent);

  Row row;
  row.emplace_back(d);
  row.emplace_back(cfg.gain);

  if (int n = phase_case_number(spec.scenario); n != 0) {
    PhaseFadingRates r = case_rates_closed_form(CaseId::from_number(n), cfg);
    row.emplace_back(r.ct.rate);
    row.emplace_back(r.rt.rate);
    row.emplace_back(r.cr.rate);
    row.emplace_back(r.rr.rate);
    if (n == 1 || n == 3) {
      row.emplace_back(r.rr_upper ? std::optional<double>(r.rr_upper->rate)
                                  : std::nullopt);
    }
    row.emplace_back(r.cn);
    return row;
  }

  const bool optimal = spec.scenario == SweepScenario::RayleighOptimal;
  PowerSplit split = optimal ? PowerSplit::optimize() : PowerSplit::equal();
  McConfig mc{spec.mc_n, mix_seed(spec.mc_seed, static_cast<std::uint64_t>(i))};

  row.emplace_back(fading_tx_cutset(split, cfg, FadingMode::HiSnr).rate);
  row.emplace_back(fading_df_rate(split, cfg, FadingMode::HiSnr).rate);
  row.emplace_back(fading_rx_cutset(split, cfg, FadingMode::HiSnr).rate);
  if (optimal) {
    CfAlphaResult cf = optimize_cf_alpha(cfg, mc);
    row.emplace_back(cf.estimate.mean);
    row.emplace_back(cf.estimate.std_err);
    row.emplace_back(cf.alpha_star);
  } else {
    McEstimate cf = cf_fading_rate(0.5, cfg, mc);
    row.emplace_back(cf.mean);
    row.emplace_back(cf.std_err);
  }
  row.emplace_back(noncoop_ergodic(cfg, FadingMode::HiSnr));
  return row;
}

}  // namespace

SweepTable run_sweep(const SweepSpec& spec) {
  if (spec.points < 1) {
    throw std::invalid_argument("run_sweep: points must be >= 1");
  }
  if (!(spec.d_min > 0.0) || !(spec.d_max >= spec.d_min)) {
    throw std::invalid_argument(
        "run_sweep: need 0 < d_min <= d_max for the distance grid");
  }

  SweepTable table;
  table.header = header_for(spec.scenario);
  table.rows.resize(static_cast<std::size_t>(spec.points));

  const int threads = std::max(1, spec.threads);
  if (threads == 1) {
    for (int i = 0; i < spec.points; ++i) {
      table.rows[static_cast<std::size_t>(i)] = compute_row(spec, i);
    }
    return table;
  }

  // Rows are independent and each draws from its own seeded stream, so any
  // partition of the index range yields identical tables.
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t]() {
      try {
        for (int i = t; i < spec.points; i += threads) {
          table.rows[static_cast<std::size_t>(i)] = compute_row(spec, i);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
  return table;
}

std::string to_csv(const SweepTable& table) {
  std::string out;
  for (std::size_t j = 0; j < table.header.size(); ++j) {
    if (j > 0) out += ',';
    out += table.header[j];
  }
  out += '\n';
  char buf[64];
  for (const Row& row : table.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out += ',';
      if (row[j]) {
        std::snprintf(buf, sizeof(buf), "%.9g", *row[j]);
        out += buf;
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace relaycap

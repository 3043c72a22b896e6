// Command-line front end: per-configuration rates, distance sweeps, the
// self-verification suite, fast-fading estimates, and cluster ceilings.
// Exit codes: 0 success, 1 failed verification, 2 usage errors.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "relaycap/cluster_bounds.hpp"
#include "relaycap/core.hpp"
#include "relaycap/phase_fading.hpp"
#include "relaycap/rayleigh.hpp"
#include "relaycap/sweep.hpp"
#include "relaycap/verify.hpp"

namespace {

using nlohmann::json;

json rate_to_json(const relaycap::RateResult& r) {
  json j;
  j["rate"] = r.rate;
  j["alpha_star"] = r.alpha_star;
  j["rho_star"] = r.rho_star ? json(*r.rho_star) : json(nullptr);
  j["branch"] = relaycap::to_string(r.branch);
  if (r.alpha_interval) {
    j["alpha_interval"] = {r.alpha_interval->first, r.alpha_interval->second};
  } else {
    j["alpha_interval"] = nullptr;
  }
  return j;
}

// Resolves an output path against RELAYCAP_OUTPUT_DIR when it is relative.
std::string resolve_output(const std::string& path) {
  const char* dir = std::getenv("RELAYCAP_OUTPUT_DIR");
  if (dir == nullptr || path.empty() || path.front() == '/') return path;
  std::string base(dir);
  if (!base.empty() && base.back() != '/') base += '/';
  return base + path;
}

bool write_or_print(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return true;
  }
  std::string full = resolve_output(path);
  std::ofstream out(full);
  if (!out) {
    std::cerr << "error: cannot open " << full << " for writing\n";
    return false;
  }
  out << content;
  return true;
}

struct LinkArgs {
  double power = 20.0;
  double exponent = 2.0;
  std::optional<double> gain;
  std::optional<double> distance;

  relaycap::NetworkConfig config() const {
    if (gain) return relaycap::NetworkConfig(power, *gain, exponent);
    return relaycap::NetworkConfig::from_distance(*distance, power, exponent);
  }
};

void add_link_options(CLI::App* cmd, LinkArgs& args) {
  cmd->add_option("--power", args.power, "Per-node transmit power")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--exponent", args.exponent, "Path-loss exponent")
      ->check(CLI::PositiveNumber);
  auto* g = cmd->add_option("--gain", args.gain,
                            "Power gain of the helper link");
  auto* d = cmd->add_option("--distance", args.distance,
                            "Helper-link distance (converted via path loss)");
  g->excludes(d);
  d->excludes(g);
  cmd->callback([g, d]() {
    if (g->count() == 0 && d->count() == 0) {
      throw CLI::RequiredError("--gain or --distance");
    }
  });
}

int run_rates(const LinkArgs& link, int case_number) {
  relaycap::NetworkConfig cfg = link.config();
  relaycap::PhaseFadingRates r =
      relaycap::case_rates(relaycap::CaseId::from_number(case_number), cfg);
  json j;
  j["case"] = case_number;
  j["power"] = cfg.power;
  j["gain"] = cfg.gain;
  j["distance"] = cfg.distance();
  j["tx_cutset"] = rate_to_json(r.ct);
  j["df"] = rate_to_json(r.rt);
  j["rx_cutset"] = rate_to_json(r.cr);
  j["cf"] = rate_to_json(r.rr);
  j["cf_upper_bound"] =
      r.rr_upper ? rate_to_json(*r.rr_upper) : json(nullptr);
  j["noncoop"] = r.cn;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_fading(const LinkArgs& link, const std::string& split,
               const std::string& mode_name, std::uint64_t n,
               std::uint64_t seed) {
  relaycap::NetworkConfig cfg = link.config();
  relaycap::FadingMode mode = mode_name == "hisnr"
                                  ? relaycap::FadingMode::HiSnr
                                  : relaycap::FadingMode::Exact;
  bool optimal = split == "optimal";
  relaycap::PowerSplit ps = optimal ? relaycap::PowerSplit::optimize()
                                    : relaycap::PowerSplit::equal();
  relaycap::McConfig mc{n, seed};

  json j;
  j["power"] = cfg.power;
  j["gain"] = cfg.gain;
  j["distance"] = cfg.distance();
  j["mode"] = mode_name;
  j["split"] = split;
  j["tx_cutset"] = rate_to_json(relaycap::fading_tx_cutset(ps, cfg, mode));
  j["df"] = rate_to_json(relaycap::fading_df_rate(ps, cfg, mode));
  j["rx_cutset"] = rate_to_json(relaycap::fading_rx_cutset(ps, cfg, mode));
  j["noncoop"] = relaycap::noncoop_ergodic(cfg, mode);

  json cf;
  relaycap::McEstimate est;
  if (optimal) {
    relaycap::CfAlphaResult res = relaycap::optimize_cf_alpha(cfg, mc);
    est = res.estimate;
    cf["alpha_star"] = res.alpha_star;
  } else {
    est = relaycap::cf_fading_rate(0.5, cfg, mc);
    cf["alpha_star"] = 0.5;
  }
  cf["mean"] = est.mean;
  cf["stderr"] = est.std_err;
  cf["n"] = est.n;
  cf["seed"] = est.seed;
  j["cf"] = cf;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_cluster(double power, int nodes, const std::string& side,
                const std::string& fading, std::uint64_t n,
                std::uint64_t seed) {
  relaycap::NetworkConfig cfg(power, 1.0);
  relaycap::ClusterSpec spec;
  spec.nodes = nodes;
  spec.side = side == "rx" ? relaycap::ClusterSide::Receiver
                           : relaycap::ClusterSide::Transmitter;
  spec.fading = fading == "rayleigh"
                    ? relaycap::ClusterFading::FastRayleigh
                    : relaycap::ClusterFading::QuasiStaticPhase;
  relaycap::McConfig mc{n, seed};

  json j;
  j["power"] = power;
  j["nodes"] = nodes;
  j["side"] = side;
  j["fading"] = fading;
  j["upper_bound"] = relaycap::cluster_upper_bound(spec, cfg, mc);
  j["gap_vs_noncoop"] = relaycap::gain_gap_vs_noncoop(spec, cfg, mc);
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Capacity bounds and achievable rates for two-node relay clusters"};
  app.require_subcommand(1);

  // rates
  auto* rates = app.add_subcommand(
      "rates", "Quasi-static phase-fading rates for one CSI/power case");
  LinkArgs rates_link;
  add_link_options(rates, rates_link);
  int case_number = 1;
  rates->add_option("--case", case_number, "CSI/power case, 1..4")
      ->check(CLI::Range(1, 4));

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Rate-versus-distance CSV sweep");
  relaycap::SweepSpec spec;
  std::string scenario = "case1";
  std::string spacing = "linear";
  std::string sweep_out;
  bool coarse_mc = false;
  sweep->add_option("--scenario", scenario, "Curve family")
      ->check(CLI::IsMember({"case1", "case2", "case3", "case4",
                             "rayleigh-equal", "rayleigh-optimal"}));
  sweep->add_option("--d-min", spec.d_min, "Smallest helper distance")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--d-max", spec.d_max, "Largest helper distance")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--points", spec.points, "Number of grid points")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--spacing", spacing, "Grid spacing")
      ->check(CLI::IsMember({"linear", "log"}));
  sweep->add_option("--power", spec.power, "Per-node transmit power")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--exponent", spec.pathloss_exponent, "Path-loss exponent")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--n", spec.mc_n, "Monte Carlo samples per cell");
  sweep->add_option("--seed", spec.mc_seed, "Monte Carlo seed");
  sweep->add_option("--threads", spec.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  sweep->add_flag("--coarse-mc", coarse_mc,
                  "Preview preset: 1000 Monte Carlo samples per cell");
  sweep->add_option("--out", sweep_out,
                    "Output file (default stdout; relative paths resolve "
                    "against RELAYCAP_OUTPUT_DIR)");

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Run the self-verification suite (exit 1 on failure)");
  relaycap::VerifyOptions vopts;
  std::string verify_out;
  verify->add_option("--n", vopts.mc_n, "Monte Carlo samples per check");
  verify->add_option("--seed", vopts.seed, "Monte Carlo seed");
  verify->add_option("--out", verify_out, "Write the JSON report here too");

  // fading
  auto* fading = app.add_subcommand(
      "fading", "Fast Rayleigh-fading rates (closed curves + Monte Carlo CF)");
  LinkArgs fading_link;
  add_link_options(fading, fading_link);
  std::string split = "equal";
  std::string mode_name = "exact";
  std::uint64_t fading_n = 100000;
  std::uint64_t fading_seed = 1;
  fading->add_option("--split", split, "Power split policy")
      ->check(CLI::IsMember({"equal", "optimal"}));
  fading->add_option("--mode", mode_name, "Closed-curve evaluation mode")
      ->check(CLI::IsMember({"exact", "hisnr"}));
  fading->add_option("--n", fading_n, "Monte Carlo samples");
  fading->add_option("--seed", fading_seed, "Monte Carlo seed");

  // cluster
  auto* cluster = app.add_subcommand(
      "cluster", "Capacity ceiling of an M-node cluster");
  double cluster_power = 20.0;
  int nodes = 2;
  std::string side = "tx";
  std::string cluster_fading = "phase";
  std::uint64_t cluster_n = 100000;
  std::uint64_t cluster_seed = 1;
  cluster->add_option("--power", cluster_power, "Total transmit power")
      ->check(CLI::PositiveNumber);
  cluster->add_option("--nodes", nodes, "Cluster size M")
      ->check(CLI::PositiveNumber);
  cluster->add_option("--side", side, "Cluster side")
      ->check(CLI::IsMember({"tx", "rx"}));
  cluster->add_option("--fading", cluster_fading, "Fading model")
      ->check(CLI::IsMember({"phase", "rayleigh"}));
  cluster->add_option("--n", cluster_n, "Monte Carlo samples");
  cluster->add_option("--seed", cluster_seed, "Monte Carlo seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (rates->parsed()) return run_rates(rates_link, case_number);

    if (sweep->parsed()) {
      if (scenario == "case1") spec.scenario = relaycap::SweepScenario::Case1;
      if (scenario == "case2") spec.scenario = relaycap::SweepScenario::Case2;
      if (scenario == "case3") spec.scenario = relaycap::SweepScenario::Case3;
      if (scenario == "case4") spec.scenario = relaycap::SweepScenario::Case4;
      if (scenario == "rayleigh-equal") {
        spec.scenario = relaycap::SweepScenario::RayleighEqual;
      }
      if (scenario == "rayleigh-optimal") {
        spec.scenario = relaycap::SweepScenario::RayleighOptimal;
      }
      spec.spacing = spacing == "log" ? relaycap::GridSpacing::Log
                                      : relaycap::GridSpacing::Linear;
      if (coarse_mc) spec.mc_n = 1000;
      std::string csv = relaycap::to_csv(relaycap::run_sweep(spec));
      return write_or_print(sweep_out, csv) ? 0 : 2;
    }

    if (verify->parsed()) {
      relaycap::VerificationReport report = relaycap::verify_all(vopts);
      for (const relaycap::CheckResult& c : report.checks) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
                  << "  worst=" << c.worst_deviation << "  at " << c.location
                  << "\n";
      }
      std::string doc = relaycap::report_to_json(report);
      if (!verify_out.empty() && !write_or_print(verify_out, doc)) return 2;
      std::cout << (report.all_pass() ? "all checks passed\n"
                                      : "verification FAILED\n");
      return report.all_pass() ? 0 : 1;
    }

    if (fading->parsed()) {
      return run_fading(fading_link, split, mode_name, fading_n, fading_seed);
    }

    if (cluster->parsed()) {
      return run_cluster(cluster_power, nodes, side, cluster_fading,
                         cluster_n, cluster_seed);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

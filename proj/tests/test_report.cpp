#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "relaycap/sweep.hpp"
#include "relaycap/verify.hpp"

using namespace relaycap;

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

}  // namespace

TEST_CASE("fast self-checks pass") {
  for (CheckResult r : {check_reference_values(), check_shift_identity(),
                        check_branch_boundaries(), check_bound_dominance()}) {
    CAPTURE(r.name);
    CAPTURE(r.location);
    CAPTURE(r.worst_deviation);
    CHECK(r.pass);
    CHECK(!r.name.empty());
  }
  CHECK(check_determinism(VerifyOptions{5000, 1}).pass);
}

TEST_CASE("verification report serializes to parseable JSON") {
  VerificationReport rep;
  rep.checks.push_back({"alpha", true, 1.5e-9, "g=4"});
  rep.checks.push_back({"beta", false, 0.25, "g=1 p=20"});
  CHECK(!rep.all_pass());

  nlohmann::json j = nlohmann::json::parse(report_to_json(rep));
  CHECK(j.at("all_pass").get<bool>() == false);
  REQUIRE(j.at("checks").size() == 2);
  CHECK(j["checks"][0].at("name") == "alpha");
  CHECK(j["checks"][0].at("pass").get<bool>() == true);
  CHECK(j["checks"][1].at("worst_deviation").get<double>() ==
        doctest::Approx(0.25));
  CHECK(j["checks"][1].at("location") == "g=1 p=20");
}

TEST_CASE("boundary locators") {
  auto diff = [](double g) { return g - 2.5; };
  CHECK(locate_sign_change(diff, 1.0, 4.0) == doctest::Approx(2.5).epsilon(1e-8));
  CHECK_THROWS_AS(locate_sign_change(diff, 3.0, 4.0), std::invalid_argument);

  // (g - 3)^2 touches zero at g = 3 without a sign change; the slope has one.
  auto contact = [](double g) { return (g - 3.0) * (g - 3.0); };
  CHECK(locate_tangent_contact(contact, 2.0, 4.0) ==
        doctest::Approx(3.0).epsilon(1e-6));
}

TEST_CASE("phase-fading sweep layout") {
  SweepSpec spec;
  spec.scenario = SweepScenario::Case1;
  spec.points = 5;
  SweepTable t = run_sweep(spec);

  std::vector<std::string> want = {"d",  "g",  "ct",       "rt", "cr",
                                   "rr", "rr_upper", "cn"};
  CHECK(t.header == want);
  REQUIRE(t.rows.size() == 5);
  CHECK(t.rows.front()[0].value() == doctest::Approx(0.2));
  CHECK(t.rows.back()[0].value() == doctest::Approx(1.5));

  for (const auto& row : t.rows) {
    REQUIRE(row.size() == want.size());
    double d = row[0].value();
    double g = row[1].value();
    CHECK(g == doctest::Approx(1.0 / (d * d)).epsilon(1e-12));
    // The floor-free bound only exists past gain 2.
    CHECK(row[6].has_value() == (g > 2.0));
    CHECK(row[2].has_value());
    CHECK(row[7].has_value());
  }
}

TEST_CASE("csv rendering keeps empty cells and nine significant digits") {
  SweepSpec spec;
  spec.scenario = SweepScenario::Case1;
  spec.points = 5;
  std::string csv = to_csv(run_sweep(spec));

  std::stringstream ss(csv);
  std::string line;
  REQUIRE(std::getline(ss, line));
  CHECK(line == "d,g,ct,rt,cr,rr,rr_upper,cn");

  int data_lines = 0;
  bool saw_empty = false;
  while (std::getline(ss, line)) {
    ++data_lines;
    auto cells = split_csv_line(line);
    REQUIRE(cells.size() == 8);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].empty()) {
        saw_empty = true;
        CHECK(i == 6);
      } else {
        CHECK(std::isfinite(std::stod(cells[i])));
      }
    }
  }
  CHECK(data_lines == 5);
  // d runs up to 1.5 so the tail rows sit below gain 2.
  CHECK(saw_empty);
}

TEST_CASE("Rayleigh sweep columns, determinism, and threading") {
  SweepSpec spec;
  spec.scenario = SweepScenario::RayleighEqual;
  spec.points = 3;
  spec.mc_n = 4000;
  spec.mc_seed = 99;

  SweepTable t = run_sweep(spec);
  std::vector<std::string> want = {"d",  "g",  "ct",        "rt",
                                   "cr", "rr_mc", "rr_stderr", "cn"};
  CHECK(t.header == want);
  REQUIRE(t.rows.size() == 3);
  for (const auto& row : t.rows) {
    CHECK(row[5].has_value());
    CHECK(row[6].value() > 0.0);
  }

  std::string once = to_csv(run_sweep(spec));
  std::string twice = to_csv(run_sweep(spec));
  CHECK(once == twice);

  SweepSpec threaded = spec;
  threaded.threads = 4;
  CHECK(to_csv(run_sweep(threaded)) == once);

  SweepSpec opt = spec;
  opt.scenario = SweepScenario::RayleighOptimal;
  SweepTable to = run_sweep(opt);
  std::vector<std::string> want_opt = {"d",  "g",     "ct",        "rt",
                                       "cr", "rr_mc", "rr_stderr", "rr_alpha",
                                       "cn"};
  CHECK(to.header == want_opt);
}

TEST_CASE("log spacing produces a geometric distance grid") {
  SweepSpec spec;
  spec.scenario = SweepScenario::Case2;
  spec.points = 4;
  spec.d_min = 0.25;
  spec.d_max = 2.0;
  spec.spacing = GridSpacing::Log;
  SweepTable t = run_sweep(spec);
  REQUIRE(t.rows.size() == 4);
  double r0 = t.rows[1][0].value() / t.rows[0][0].value();
  double r1 = t.rows[2][0].value() / t.rows[1][0].value();
  double r2 = t.rows[3][0].value() / t.rows[2][0].value();
  CHECK(r0 == doctest::Approx(r1).epsilon(1e-12));
  CHECK(r1 == doctest::Approx(r2).epsilon(1e-12));
  CHECK(t.rows.front()[0].value() == doctest::Approx(0.25));
  CHECK(t.rows.back()[0].value() == doctest::Approx(2.0));

  CHECK_THROWS_AS(
      [] {
        SweepSpec bad;
        bad.points = 0;
        run_sweep(bad);
      }(),
      std::invalid_argument);
}

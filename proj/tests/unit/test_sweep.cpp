#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>
#include <string>

#include "pas/config_json.hpp"
#include "test_support.hpp"

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using test_support::scenario;

namespace {

nlohmann::json base_config_json() {
  return nlohmann::json{
      {"scenario",
       {{"carrier_frequency_hz", 28e9},
        {"effective_refractive_index", 1.4},
        {"feed_x_m", 0.0},
        {"user_x_m", {9.9, 10.1}},
        {"user_distance_d_m", 4.0},
        {"pa_count_n", 8},
        {"transmit_power_dbm", 30.0},
        {"noise_power_dbm", -90.0}}},
      {"sweep", {{"axis", "transmit_power_dBm"}, {"values", {10.0, 20.0, 30.0}}}},
      {"schemes", {"proposed", "benchmark"}},
  };
}

}  // namespace

TEST_CASE("config parsing accepts the documented schema") {
  const auto config = pas::parse_sweep_config(base_config_json());
  CHECK(config.base.pa_count == 8);
  CHECK(config.base.user.count() == 2);
  CHECK(config.axis == pas::SweepAxis::transmit_power_dbm);
  CHECK(config.axis_values == std::vector<double>{10.0, 20.0, 30.0});
  REQUIRE(config.schemes.size() == 2);
  // canonical order is by scheme name
  CHECK(config.schemes[0] == pas::SchemeTag::benchmark);
  CHECK(config.schemes[1] == pas::SchemeTag::proposed);
  CHECK(config.candidates_per_antenna == 4);
}

TEST_CASE("config parsing rejects unknown and missing fields") {
  auto with_typo = base_config_json();
  with_typo["scenario"]["carrier_frequenzy_hz"] = 28e9;
  try {
    pas::parse_sweep_config(with_typo);
    FAIL("expected config_error");
  } catch (const pas::config_error& e) {
    CHECK_THAT(e.field, ContainsSubstring("carrier_frequenzy_hz"));
  }

  auto missing = base_config_json();
  missing["scenario"].erase("noise_power_dbm");
  try {
    pas::parse_sweep_config(missing);
    FAIL("expected config_error");
  } catch (const pas::config_error& e) {
    CHECK(e.field == "scenario.noise_power_dbm");
  }

  auto unknown_top = base_config_json();
  unknown_top["zeed"] = 7;
  CHECK_THROWS_AS(pas::parse_sweep_config(unknown_top), pas::config_error);

  auto bad_scheme = base_config_json();
  bad_scheme["schemes"] = {"fastest"};
  CHECK_THROWS_AS(pas::parse_sweep_config(bad_scheme), pas::config_error);

  auto decreasing = base_config_json();
  decreasing["sweep"]["values"] = {30.0, 20.0};
  CHECK_THROWS_AS(pas::parse_sweep_config(decreasing), pas::config_error);

  auto fractional_n = base_config_json();
  fractional_n["sweep"]["axis"] = "pa_count_N";
  fractional_n["sweep"]["values"] = {2.5};
  CHECK_THROWS_AS(pas::parse_sweep_config(fractional_n), pas::config_error);
}

TEST_CASE("antenna-count axis spreads antennas over the base span") {
  const auto base = pas::UserArray::make({9.7, 10.3}, 4.0);
  const auto four = pas::resize_user_array(base, 4);
  REQUIRE(four.count() == 4);
  CHECK_THAT(four.x_m[0], WithinAbs(9.7, 1e-12));
  CHECK_THAT(four.x_m[1], WithinAbs(9.9, 1e-12));
  CHECK_THAT(four.x_m[2], WithinAbs(10.1, 1e-12));
  CHECK_THAT(four.x_m[3], WithinAbs(10.3, 1e-12));

  const auto one = pas::resize_user_array(base, 1);
  CHECK(one.x_m == std::vector<double>{10.0});
}

TEST_CASE("scenario_for rebuilds along each axis") {
  const auto base = scenario({9.9, 10.1}, 4.0, 8);

  const auto power = pas::scenario_for(base, pas::SweepAxis::transmit_power_dbm, 20.0);
  CHECK_THAT(power.budget.power_w, WithinRel(0.1, 1e-12));

  const auto moved = pas::scenario_for(base, pas::SweepAxis::user_distance_m, 2.5);
  CHECK(moved.user.distance_m == 2.5);

  const auto more = pas::scenario_for(base, pas::SweepAxis::pa_count, 16.0);
  CHECK(more.pa_count == 16);

  const auto denser = pas::scenario_for(base, pas::SweepAxis::user_antenna_count, 4.0);
  CHECK(denser.user.count() == 4);
}

TEST_CASE("run_sweep emits ordered rows with recomputable rates") {
  auto config = pas::parse_sweep_config(base_config_json());
  const auto table = pas::run_sweep(config);
  REQUIRE(table.rows.size() == 6);
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    REQUIRE(row.ok);
    CHECK(row.scheme ==
          (i % 2 == 0 ? pas::SchemeTag::benchmark : pas::SchemeTag::proposed));
    const auto rebuilt =
        pas::scenario_for(config.base, *config.axis, row.axis_value);
    CHECK_THAT(row.rate_bps_hz,
               WithinRel(pas::achievable_rate_bps_hz(rebuilt, row.positions_m), 1e-12));
  }
  CHECK(table.rows[0].axis_value == 10.0);
  CHECK(table.rows[5].axis_value == 30.0);
}

TEST_CASE("identical configs produce byte-identical tables") {
  const auto config = pas::parse_sweep_config(base_config_json());
  const std::string a = pas::to_csv(pas::run_sweep(config));
  const std::string b = pas::to_csv(pas::run_sweep(config));
  CHECK(a == b);
  CHECK_THAT(a, ContainsSubstring(
                    "axis_value,scheme,rate_bps_hz,snr_db,positions_semicolon_separated_m"));
  // positions column uses semicolons, so every row keeps five comma fields
  std::istringstream lines(a);
  std::string line;
  while (std::getline(lines, line)) {
    CHECK(std::count(line.begin(), line.end(), ',') == 4);
  }
}

TEST_CASE("trace_step exposes the three per-step curves") {
  const auto scn = scenario({9.9, 10.1}, 4.0, 8);
  const auto trace = pas::trace_step(scn, 2);
  CHECK(trace.pa_index == 5);
  CHECK(trace.rightward);
  REQUIRE(trace.antenna_gain.size() == 2);
  REQUIRE(trace.x_m.size() == trace.total_gain.size());

  // totals are the antenna sums
  for (std::size_t i = 0; i < trace.x_m.size(); i += 57) {
    CHECK_THAT(trace.antenna_gain[0][i] + trace.antenna_gain[1][i],
               WithinRel(trace.total_gain[i], 1e-12));
  }

  // the traced argmax and the grid oracle see the same curve
  std::size_t best = 0;
  for (std::size_t i = 1; i < trace.total_gain.size(); ++i) {
    if (trace.total_gain[i] > trace.total_gain[best]) best = i;
  }
  auto state = pas::make_placement_state(scn.waveguide, scn.user, 8, 10.0);
  pas::GridSpec grid{trace.x_m.front(), trace.x_m.back(),
                     scn.waveguide.wavelength_m / 1000.0};
  const auto [x_best, gain] =
      pas::grid_argmax_gain(state, 5, grid, scn.waveguide, scn.user);
  CHECK(trace.x_m[best] == x_best);
  CHECK(trace.total_gain[best] == gain);

  CHECK_THROWS_AS(pas::trace_step(scn, 1), pas::argument_error);
  CHECK_THROWS_AS(pas::trace_step(scn, 9), pas::argument_error);

  const std::string csv = pas::to_csv(trace);
  CHECK_THAT(csv, ContainsSubstring("x_m,dtheta_exact_rad_a1,dtheta_lin_rad_a1,gain_a1,"
                                    "dtheta_exact_rad_a2,dtheta_lin_rad_a2,gain_a2,"
                                    "gain_total"));

  // the chosen midpoint lands on the traced optimum, and the candidate
  // grids of the two antennas bracket it
  CHECK_THAT(trace.chosen_x_m,
             WithinAbs(trace.x_m[best], scn.waveguide.wavelength_m / 100.0));
  double lo_candidate = trace.candidate_sets[0].candidates.front().x_m;
  double hi_candidate = trace.candidate_sets[0].candidates.back().x_m;
  for (const auto& set : trace.candidate_sets) {
    lo_candidate = std::min(lo_candidate, set.candidates.front().x_m);
    hi_candidate = std::max(hi_candidate, set.candidates.back().x_m);
  }
  CHECK(trace.x_m[best] >= lo_candidate - scn.waveguide.wavelength_m / 100.0);
  CHECK(trace.x_m[best] <= hi_candidate + scn.waveguide.wavelength_m / 100.0);

  // linearized phase stays within 0.05 rad of exact over the whole
  // candidate window, not just the first alignment period
  double worst = 0.0;
  for (std::size_t i = 0; i < trace.x_m.size(); ++i) {
    if (trace.x_m[i] > hi_candidate) break;
    for (std::size_t m = 0; m < trace.antenna_gain.size(); ++m) {
      worst = std::max(worst,
                       pas::circular_distance(trace.exact_phase_diff_rad[m][i],
                                              trace.linear_phase_diff_rad[m][i]));
    }
  }
  CHECK(worst <= 0.05);
}

TEST_CASE("trace of a leftward step mirrors the geometry") {
  const auto scn = scenario({9.9, 10.1}, 4.0, 8);
  const auto trace = pas::trace_step(scn, 6);
  CHECK(trace.pa_index == 3);
  CHECK_FALSE(trace.rightward);
  CHECK(trace.chosen_x_m <= trace.reference_x_m);
  CHECK(trace.x_m.front() < trace.x_m.back());
  CHECK(trace.x_m.back() == trace.reference_x_m);
  for (const auto& set : trace.candidate_sets) {
    for (const auto& c : set.candidates) CHECK(c.x_m <= trace.reference_x_m);
  }
  // chosen matches the traced optimum on the left branch too
  std::size_t best = 0;
  for (std::size_t i = 1; i < trace.total_gain.size(); ++i) {
    if (trace.total_gain[i] > trace.total_gain[best]) best = i;
  }
  CHECK_THAT(trace.chosen_x_m,
             WithinAbs(trace.x_m[best], scn.waveguide.wavelength_m / 100.0));
}

TEST_CASE("run_sweep requires the sweep section") {
  auto json = base_config_json();
  json.erase("sweep");
  const auto config = pas::parse_sweep_config(json);
  CHECK_FALSE(config.axis.has_value());
  try {
    pas::run_sweep(config);
    FAIL("expected config_error");
  } catch (const pas::config_error& e) {
    CHECK(e.field == "sweep");
  }
}

TEST_CASE("trace candidates sit on per-antenna gain peaks for one antenna") {
  const auto scn = scenario({10.0}, 4.0, 8);
  const auto trace = pas::trace_step(scn, 2);
  const auto& gain = trace.antenna_gain[0];
  std::vector<double> peaks;
  for (std::size_t i = 1; i + 1 < gain.size(); ++i) {
    if (gain[i] > gain[i - 1] && gain[i] >= gain[i + 1]) peaks.push_back(trace.x_m[i]);
  }
  REQUIRE_FALSE(peaks.empty());
  for (const auto& candidate : trace.candidate_sets[0].candidates) {
    double nearest = std::numeric_limits<double>::infinity();
    for (double peak : peaks) nearest = std::min(nearest, std::abs(peak - candidate.x_m));
    CHECK(nearest <= scn.waveguide.wavelength_m / 100.0);
  }
}

TEST_CASE("failed rows keep the table five columns wide") {
  auto config = pas::parse_sweep_config(base_config_json());
  // a distance sweep through zero is rejected per-row, not fatally
  config.axis = pas::SweepAxis::user_distance_m;
  config.axis_values = {-1.0, 4.0};
  const auto table = pas::run_sweep(config);
  REQUIRE(table.rows.size() == 4);
  CHECK_FALSE(table.rows[0].ok);
  CHECK(table.rows[2].ok);
  const std::string csv = pas::to_csv(table);
  CHECK_THAT(csv, ContainsSubstring("nan,nan,ERROR("));
}

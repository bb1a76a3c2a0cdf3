#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "pas/schemes.hpp"

namespace pas {

enum class SweepAxis { transmit_power_dbm, user_distance_m, pa_count, user_antenna_count };

inline const char* axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::transmit_power_dbm: return "transmit_power_dBm";
    case SweepAxis::user_distance_m: return "user_distance_d_m";
    case SweepAxis::pa_count: return "pa_count_N";
    case SweepAxis::user_antenna_count: return "user_antenna_count_M";
  }
  return "?";
}

inline SweepAxis parse_axis(const std::string& name) {
  if (name == "transmit_power_dBm") return SweepAxis::transmit_power_dbm;
  if (name == "user_distance_d_m") return SweepAxis::user_distance_m;
  if (name == "pa_count_N") return SweepAxis::pa_count;
  if (name == "user_antenna_count_M") return SweepAxis::user_antenna_count;
  throw argument_error("unknown sweep axis '" + name + "'");
}

struct SweepConfig {
  Scenario base;
  std::optional<SweepAxis> axis;     // required for sweeps, unused for traces
  std::vector<double> axis_values;   // strictly increasing
  std::vector<SchemeTag> schemes;    // deduplicated, sorted by name
  int candidates_per_antenna = default_candidates_per_antenna;
  std::string output_path;
  std::uint64_t seed = 0;  // consumed by the verification suite only
};

// Evenly spaced antenna positions across the base array's span; a single
// antenna collapses to the span center.
inline UserArray resize_user_array(const UserArray& base, int antenna_count) {
  if (antenna_count < 1) throw argument_error("antenna count must be >= 1");
  if (antenna_count == 1) {
    return UserArray::make({base.center_x_m()}, base.distance_m);
  }
  if (!(base.span_m() > 0.0)) {
    throw argument_error("cannot spread antennas over a zero-span base array");
  }
  std::vector<double> xs(static_cast<std::size_t>(antenna_count));
  const double lo = base.x_m.front();
  const double step = base.span_m() / static_cast<double>(antenna_count - 1);
  for (int i = 0; i < antenna_count; ++i) {
    xs[static_cast<std::size_t>(i)] = lo + step * static_cast<double>(i);
  }
  xs.back() = base.x_m.back();
  return UserArray::make(std::move(xs), base.distance_m);
}

inline Scenario scenario_for(const Scenario& base, SweepAxis axis, double value) {
  Scenario scenario = base;
  switch (axis) {
    case SweepAxis::transmit_power_dbm:
      scenario.budget = LinkBudget::make(dbm_to_watts(value), base.budget.noise_power_w);
      break;
    case SweepAxis::user_distance_m:
      scenario.user = UserArray::make(base.user.x_m, value);
      break;
    case SweepAxis::pa_count:
      scenario.pa_count = static_cast<int>(std::llround(value));
      if (scenario.pa_count < 1 ||
          std::abs(value - std::llround(value)) > 1e-9) {
        throw argument_error("pa_count_N values must be positive integers");
      }
      break;
    case SweepAxis::user_antenna_count: {
      const auto count = std::llround(value);
      if (count < 1 || std::abs(value - count) > 1e-9) {
        throw argument_error("user_antenna_count_M values must be positive integers");
      }
      scenario.user = resize_user_array(base.user, static_cast<int>(count));
      break;
    }
  }
  return scenario;
}

struct SweepRow {
  double axis_value = 0.0;
  SchemeTag scheme = SchemeTag::proposed;
  bool ok = false;
  std::string error;
  double rate_bps_hz = 0.0;
  double snr = 0.0;
  std::vector<double> positions_m;
};

struct SweepTable {
  SweepAxis axis = SweepAxis::transmit_power_dbm;
  std::vector<SweepRow> rows;
};

// One placement per (axis value, scheme), rows in that order. A scheme
// failure is recorded in its row and the sweep continues.
inline SweepTable run_sweep(const SweepConfig& config) {
  if (!config.axis.has_value()) {
    throw config_error("sweep", "sweep section is required to run a sweep");
  }
  if (config.axis_values.empty()) {
    throw config_error("sweep.values", "sweep needs at least one axis value");
  }
  if (config.schemes.empty()) {
    throw config_error("schemes", "sweep needs at least one scheme");
  }
  SweepTable table;
  table.axis = *config.axis;
  table.rows.reserve(config.axis_values.size() * config.schemes.size());
  for (double value : config.axis_values) {
    for (SchemeTag scheme : config.schemes) {
      SweepRow row;
      row.axis_value = value;
      row.scheme = scheme;
      try {
        const Scenario scenario = scenario_for(config.base, *config.axis, value);
        const PlacementResult result =
            run_scheme(scenario, scheme, config.candidates_per_antenna);
        row.ok = true;
        row.rate_bps_hz = result.rate_bps_hz;
        row.snr = result.snr;
        row.positions_m = result.positions_m;
      } catch (const std::exception& e) {
        row.ok = false;
        row.error = e.what();
      }
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

namespace detail {

inline std::string format_g(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

inline std::string sanitize_csv(std::string text) {
  for (char& c : text) {
    if (c == ',' || c == ';' || c == '\n' || c == '\r') c = ' ';
  }
  return text;
}

}  // namespace detail

inline std::string to_csv(const SweepTable& table) {
  std::string out = "axis_value,scheme,rate_bps_hz,snr_db,positions_semicolon_separated_m\n";
  for (const auto& row : table.rows) {
    out += detail::format_g(row.axis_value);
    out += ',';
    out += scheme_name(row.scheme);
    out += ',';
    if (row.ok) {
      out += detail::format_g(row.rate_bps_hz);
      out += ',';
      out += detail::format_g(10.0 * std::log10(row.snr));
      out += ',';
      for (std::size_t i = 0; i < row.positions_m.size(); ++i) {
        if (i > 0) out += ';';
        out += detail::format_g(row.positions_m[i]);
      }
    } else {
      out += "nan,nan,ERROR(" + detail::sanitize_csv(row.error) + ")";
    }
    out += '\n';
  }
  return out;
}

// Dense per-position curves for one deployment step of the proposed scheme:
// wrapped phase difference to the accumulated channel (exact and linearized),
// per-antenna gain, and total gain, over the step's search window.
struct StepTrace {
  int step = 0;
  int pa_index = 0;
  bool rightward = true;
  double reference_x_m = 0.0;
  std::vector<double> x_m;
  std::vector<std::vector<double>> exact_phase_diff_rad;   // [antenna][point]
  std::vector<std::vector<double>> linear_phase_diff_rad;  // [antenna][point]
  std::vector<std::vector<double>> antenna_gain;           // [antenna][point]
  std::vector<double> total_gain;
  std::vector<CandidateSet> candidate_sets;
  SpanSelection selection;
  double chosen_x_m = 0.0;
  double chosen_gain = 0.0;
  bool clamped = false;
};

inline StepTrace trace_step(const Scenario& scenario, int step,
                            int candidates_per_antenna = default_candidates_per_antenna,
                            double grid_step_m = 0.0) {
  if (step < 2 || step > scenario.pa_count) {
    throw argument_error("trace step must be in [2, pa_count]");
  }
  const auto& wg = scenario.waveguide;
  const auto& user = scenario.user;
  if (grid_step_m == 0.0) grid_step_m = wg.wavelength_m / 1000.0;

  const CenterSolution center = optimize_center(user);
  PlacementState state =
      make_placement_state(wg, user, scenario.pa_count, center.x_center_m);
  const auto order = deployment_order(scenario.pa_count);
  for (int k = 1; k + 1 < step; ++k) {
    place_next(state, order[static_cast<std::size_t>(k)], candidates_per_antenna, wg,
               user);
  }

  // Targets must be captured before the step is taken.
  const std::vector<double> targets = state.accumulated_phase_rad;
  const int pa_index = order[static_cast<std::size_t>(step - 1)];

  StepTrace trace;
  trace.step = step;
  trace.pa_index = pa_index;
  trace.rightward = pa_index > state.center_index;
  trace.reference_x_m = reference_position(state, pa_index, wg);

  GridSpec grid;
  grid.step_m = grid_step_m;
  const double window = oracle_window_guided_wavelengths * wg.guided_wavelength_m;
  if (trace.rightward) {
    grid.lo_m = trace.reference_x_m;
    grid.hi_m = trace.reference_x_m + window;
  } else {
    grid.lo_m = trace.reference_x_m - window;
    grid.hi_m = trace.reference_x_m;
  }
  grid.validate();

  const std::size_t points = grid.point_count();
  const std::size_t m_count = user.count();
  trace.x_m.resize(points);
  trace.exact_phase_diff_rad.assign(m_count, std::vector<double>(points));
  trace.linear_phase_diff_rad.assign(m_count, std::vector<double>(points));
  trace.antenna_gain.assign(m_count, std::vector<double>(points));
  trace.total_gain.assign(points, 0.0);

  std::vector<CandidateSet> sets;
  sets.reserve(m_count);
  for (std::size_t m = 0; m < m_count; ++m) {
    sets.push_back(aligned_candidates(wg, user, m, targets[m], trace.reference_x_m,
                                      trace.rightward, candidates_per_antenna));
  }

  std::vector<double> gains(m_count);
  for (std::size_t i = 0; i < points; ++i) {
    // anchored at the reference on either branch so the boundary sample is
    // exact; ascending in x in both cases
    const double x =
        trace.rightward
            ? grid.lo_m + static_cast<double>(i) * grid.step_m
            : grid.hi_m - static_cast<double>(points - 1 - i) * grid.step_m;
    trace.x_m[i] = x;
    trace.total_gain[i] = prospective_gain(state, wg, user, x, &gains);
    for (std::size_t m = 0; m < m_count; ++m) {
      const double exact = phase_delay(wg, user, m, x);
      const double linear = sets[m].reference_phase_rad +
                            sets[m].phase_slope_rad_per_m * (x - trace.reference_x_m);
      trace.exact_phase_diff_rad[m][i] = wrap_two_pi(exact - targets[m]);
      trace.linear_phase_diff_rad[m][i] = wrap_two_pi(linear - targets[m]);
      trace.antenna_gain[m][i] = gains[m];
    }
  }

  trace.candidate_sets = std::move(sets);
  const StepDiagnostics diag =
      place_next(state, pa_index, candidates_per_antenna, wg, user);
  trace.selection = diag.selection;
  trace.chosen_x_m = diag.x_m;
  trace.clamped = diag.clamped;
  // State already includes the chosen antenna; its gain is the placed gain.
  trace.chosen_gain = placed_gain(state);
  return trace;
}

inline std::string to_csv(const StepTrace& trace) {
  std::string out = "x_m";
  const std::size_t m_count = trace.antenna_gain.size();
  for (std::size_t m = 1; m <= m_count; ++m) {
    const std::string suffix = "_a" + std::to_string(m);
    out += ",dtheta_exact_rad" + suffix;
    out += ",dtheta_lin_rad" + suffix;
    out += ",gain" + suffix;
  }
  out += ",gain_total\n";
  for (std::size_t i = 0; i < trace.x_m.size(); ++i) {
    out += detail::format_g(trace.x_m[i]);
    for (std::size_t m = 0; m < m_count; ++m) {
      out += ',';
      out += detail::format_g(trace.exact_phase_diff_rad[m][i]);
      out += ',';
      out += detail::format_g(trace.linear_phase_diff_rad[m][i]);
      out += ',';
      out += detail::format_g(trace.antenna_gain[m][i]);
    }
    out += ',';
    out += detail::format_g(trace.total_gain[i]);
    out += '\n';
  }
  return out;
}

}  // namespace pas

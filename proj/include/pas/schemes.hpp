#pragma once

#include <string>
#include <vector>

#include "pas/center.hpp"
#include "pas/oracle.hpp"
#include "pas/placement.hpp"

namespace pas {

enum class SchemeTag { proposed, benchmark, oracle_greedy };

inline const char* scheme_name(SchemeTag tag) {
  switch (tag) {
    case SchemeTag::proposed: return "proposed";
    case SchemeTag::benchmark: return "benchmark";
    case SchemeTag::oracle_greedy: return "oracle-greedy";
  }
  return "?";
}

inline SchemeTag parse_scheme(const std::string& name) {
  if (name == "proposed") return SchemeTag::proposed;
  if (name == "benchmark") return SchemeTag::benchmark;
  if (name == "oracle-greedy") return SchemeTag::oracle_greedy;
  throw argument_error("unknown scheme '" + name + "'");
}

struct PlacementResult {
  SchemeTag scheme = SchemeTag::proposed;
  double center_x_m = 0.0;
  std::vector<double> positions_m;  // by antenna index; ascending in x
  std::vector<StepDiagnostics> steps;
  double snr = 0.0;
  double rate_bps_hz = 0.0;
};

namespace detail {

inline StepDiagnostics center_step(const PlacementState& state, double center_x_m) {
  StepDiagnostics diag;
  diag.step = 1;
  diag.pa_index = state.center_index;
  diag.x_m = center_x_m;
  diag.reference_x_m = center_x_m;
  diag.selection.chosen.assign(state.accumulated.size(), center_x_m);
  diag.selection.midpoint_m = center_x_m;
  diag.gain_after = placed_gain(state);
  return diag;
}

inline void finalize_result(PlacementResult& result, const Scenario& scenario,
                            const PlacementState& state) {
  result.positions_m = state.positions_by_index();
  result.snr = received_snr(scenario, result.positions_m);
  result.rate_bps_hz = std::log2(1.0 + result.snr);
}

}  // namespace detail

// Two-layer deployment: center antenna at the inverse-path-loss optimum, then
// the remaining antennas center-outward through the candidate-compression
// step.
inline PlacementResult place_all(const Scenario& scenario,
                                 int candidates_per_antenna = default_candidates_per_antenna) {
  const auto& wg = scenario.waveguide;
  const auto& user = scenario.user;
  const CenterSolution center = optimize_center(user);
  PlacementState state =
      make_placement_state(wg, user, scenario.pa_count, center.x_center_m);

  PlacementResult result;
  result.scheme = SchemeTag::proposed;
  result.center_x_m = center.x_center_m;
  result.steps.reserve(static_cast<std::size_t>(scenario.pa_count));
  result.steps.push_back(detail::center_step(state, center.x_center_m));
  const auto order = deployment_order(scenario.pa_count);
  for (std::size_t k = 1; k < order.size(); ++k) {
    result.steps.push_back(
        place_next(state, order[k], candidates_per_antenna, wg, user));
  }
  detail::finalize_result(result, scenario, state);
  return result;
}

// Baseline from the single-antenna literature: a virtual antenna at the
// geometric center of the array, the center antenna placed below it, and each
// further antenna solved (with the same linearized machinery, one candidate)
// so its phase at the virtual antenna differs from its inward neighbor's by
// one full turn: +2*pi rightward, -2*pi leftward.
inline PlacementResult benchmark_place(const Scenario& scenario) {
  const auto& wg = scenario.waveguide;
  const UserArray virtual_user =
      UserArray::make({scenario.user.center_x_m()}, scenario.user.distance_m);
  PlacementState state = make_placement_state(wg, virtual_user, scenario.pa_count,
                                              virtual_user.x_m.front());
  // Exact aggregates against the real array, for per-step gain reporting.
  PlacementState real_state = make_placement_state(
      wg, scenario.user, scenario.pa_count, virtual_user.x_m.front());

  PlacementResult result;
  result.scheme = SchemeTag::benchmark;
  result.center_x_m = virtual_user.x_m.front();
  result.steps.reserve(static_cast<std::size_t>(scenario.pa_count));
  result.steps.push_back(detail::center_step(real_state, result.center_x_m));

  const auto order = deployment_order(scenario.pa_count);
  for (std::size_t k = 1; k < order.size(); ++k) {
    const int pa_index = order[k];
    const bool rightward = pa_index > state.center_index;
    const double neighbor_x =
        rightward ? state.right_frontier_m : state.left_frontier_m;
    const double reference = reference_position(state, pa_index, wg);
    const double target = wrap_two_pi(phase_delay(wg, virtual_user, 0, neighbor_x));
    CandidateSet set =
        aligned_candidates(wg, virtual_user, 0, target, reference, rightward, 1);

    StepDiagnostics diag;
    diag.step = static_cast<int>(k) + 1;
    diag.pa_index = pa_index;
    diag.reference_x_m = reference;
    diag.x_m = set.candidates.front().x_m;
    diag.selection.chosen = {diag.x_m};
    diag.selection.span_m = 0.0;
    diag.selection.midpoint_m = diag.x_m;
    diag.candidate_sets.push_back(std::move(set));

    apply_placement(state, pa_index, diag.x_m, wg, virtual_user);
    apply_placement(real_state, pa_index, diag.x_m, wg, scenario.user);
    diag.gain_after = placed_gain(real_state);
    result.steps.push_back(std::move(diag));
  }
  detail::finalize_result(result, scenario, real_state);
  return result;
}

inline constexpr double oracle_window_guided_wavelengths = 4.0;

// Per-step ground truth: same center and order as the proposed scheme, but
// every subsequent antenna is placed by dense grid search of the exact gain
// over a window of a few guided wavelengths beyond the reference.
inline PlacementResult oracle_greedy_place(const Scenario& scenario,
                                           double grid_step_m = 0.0) {
  if (grid_step_m < 0.0) throw argument_error("grid step must be positive");
  const auto& wg = scenario.waveguide;
  const auto& user = scenario.user;
  if (grid_step_m == 0.0) grid_step_m = wg.wavelength_m / 1000.0;
  const double window = oracle_window_guided_wavelengths * wg.guided_wavelength_m;

  const CenterSolution center = optimize_center(user);
  PlacementState state =
      make_placement_state(wg, user, scenario.pa_count, center.x_center_m);

  PlacementResult result;
  result.scheme = SchemeTag::oracle_greedy;
  result.center_x_m = center.x_center_m;
  result.steps.reserve(static_cast<std::size_t>(scenario.pa_count));
  result.steps.push_back(detail::center_step(state, center.x_center_m));

  const auto order = deployment_order(scenario.pa_count);
  for (std::size_t k = 1; k < order.size(); ++k) {
    const int pa_index = order[k];
    const bool rightward = pa_index > state.center_index;
    const double reference = reference_position(state, pa_index, wg);
    GridSpec grid;
    grid.step_m = grid_step_m;
    if (rightward) {
      grid.lo_m = reference;
      grid.hi_m = reference + window;
    } else {
      grid.lo_m = reference - window;
      grid.hi_m = reference;
    }
    const auto [x_best, gain] = grid_argmax_gain(state, pa_index, grid, wg, user);

    StepDiagnostics diag;
    diag.step = static_cast<int>(k) + 1;
    diag.pa_index = pa_index;
    diag.reference_x_m = reference;
    diag.x_m = x_best;
    diag.selection.chosen.assign(user.count(), x_best);
    diag.selection.midpoint_m = x_best;

    apply_placement(state, pa_index, x_best, wg, user);
    diag.gain_after = placed_gain(state);
    result.steps.push_back(std::move(diag));
  }
  detail::finalize_result(result, scenario, state);
  return result;
}

inline PlacementResult run_scheme(const Scenario& scenario, SchemeTag scheme,
                                  int candidates_per_antenna = default_candidates_per_antenna,
                                  double oracle_grid_step_m = 0.0) {
  switch (scheme) {
    case SchemeTag::proposed: return place_all(scenario, candidates_per_antenna);
    case SchemeTag::benchmark: return benchmark_place(scenario);
    case SchemeTag::oracle_greedy:
      return oracle_greedy_place(scenario, oracle_grid_step_m);
  }
  throw argument_error("unknown scheme");
}

// Smallest gap between adjacent positions; +inf for a single antenna.
inline double min_adjacent_gap_m(std::span<const double> positions_m) {
  std::vector<double> sorted(positions_m.begin(), positions_m.end());
  std::sort(sorted.begin(), sorted.end());
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    gap = std::min(gap, sorted[i] - sorted[i - 1]);
  }
  return gap;
}

}  // namespace pas

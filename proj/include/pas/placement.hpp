#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <map>
#include <span>
#include <vector>

#include "pas/channel.hpp"

namespace pas {

inline constexpr int default_candidates_per_antenna = 4;

// Center-outward deployment order over 1-based antenna indices:
// [c, c+1, ..., N, c-1, ..., 1] with c = ceil(N/2).
inline std::vector<int> deployment_order(int pa_count) {
  if (pa_count < 1) throw argument_error("pa_count must be >= 1");
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(pa_count));
  const int center = (pa_count + 1) / 2;
  for (int n = center; n <= pa_count; ++n) order.push_back(n);
  for (int n = center - 1; n >= 1; --n) order.push_back(n);
  return order;
}

// Reduce an angle to [0, 2*pi).
inline double wrap_two_pi(double angle_rad) {
  double r = std::fmod(angle_rad, two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r = 0.0;
  return r;
}

// Angular distance between two phases, in [0, pi].
inline double circular_distance(double a_rad, double b_rad) {
  const double d = wrap_two_pi(a_rad - b_rad);
  return std::min(d, two_pi - d);
}

struct Candidate {
  long long z = 0;  // integer alignment index (phase target + 2*pi*z)
  double x_m = 0.0;
};

// Phase-aligned candidate positions for one receive antenna under the
// linearized phase model around the reference point.
struct CandidateSet {
  std::size_t antenna = 0;
  double reference_x_m = 0.0;        // feasible-region boundary x^s
  double reference_phase_rad = 0.0;  // unwrapped phase at the reference
  double phase_slope_rad_per_m = 0.0;
  std::vector<Candidate> candidates;  // ascending in x
};

// Solve the linearized alignment condition
//   phase(x) ~ reference_phase + slope * (x - reference_x) = target + 2*pi*z
// for the `count` integers z nearest the reference on the feasible side:
// rightward placements take the smallest z with x(z) >= reference_x and the
// next count-1 above it; leftward placements mirror that below the reference.
//
// The slope is the linearized one (lateral term divided by the vertical
// distance); if it is not positive the linear model cannot order candidates
// and the geometry is reported instead of patched.
inline CandidateSet aligned_candidates(const WaveguideParams& wg, const UserArray& user,
                                       std::size_t antenna, double target_phase_rad,
                                       double reference_x_m, bool rightward, int count) {
  if (count < 1) throw argument_error("candidate count must be >= 1");
  CandidateSet set;
  set.antenna = antenna;
  set.reference_x_m = reference_x_m;
  set.reference_phase_rad = phase_delay(wg, user, antenna, reference_x_m);
  set.phase_slope_rad_per_m =
      two_pi / wg.wavelength_m * (reference_x_m - user.x_m.at(antenna)) / user.distance_m +
      two_pi / wg.guided_wavelength_m;
  if (!(set.phase_slope_rad_per_m > 0.0)) {
    throw model_violation_error("linearized phase slope is not positive at the reference");
  }

  // Snap tolerance keeps an exactly-aligned reference from landing a full
  // period away through rounding of the unwrapped phases.
  constexpr double snap_periods = 1e-9 / two_pi;
  const double residual_periods = (set.reference_phase_rad - target_phase_rad) / two_pi;
  long long z_first;
  if (rightward) {
    z_first = static_cast<long long>(std::ceil(residual_periods - snap_periods));
  } else {
    z_first = static_cast<long long>(std::floor(residual_periods + snap_periods)) -
              (count - 1);
  }

  set.candidates.reserve(static_cast<std::size_t>(count));
  for (long long z = z_first; z < z_first + count; ++z) {
    double x = (target_phase_rad + two_pi * static_cast<double>(z) -
                set.reference_phase_rad) /
                   set.phase_slope_rad_per_m +
               reference_x_m;
    if (rightward && x < reference_x_m) x = reference_x_m;
    if (!rightward && x > reference_x_m) x = reference_x_m;
    set.candidates.push_back({z, x});
  }
  return set;
}

// Incremental state of the sequential deployment. `accumulated` follows the
// fixed-amplitude model (per-antenna amplitude frozen at the center-antenna
// distance) that drives the alignment targets; `exact_aggregate` carries the
// exact coefficients for gain reporting and oracle scoring.
struct PlacementState {
  int pa_count = 0;
  int center_index = 0;  // 1-based
  std::map<int, double> placed;
  std::vector<std::complex<double>> accumulated;
  std::vector<double> accumulated_phase_rad;  // wrapped negated arguments, [0, 2*pi)
  std::vector<std::complex<double>> exact_aggregate;
  std::vector<double> amplitude_scale;
  double right_frontier_m = 0.0;
  double left_frontier_m = 0.0;

  std::vector<double> positions_by_index() const {
    std::vector<double> out;
    out.reserve(placed.size());
    for (const auto& [index, x] : placed) out.push_back(x);
    return out;
  }
};

namespace detail {

inline void refresh_accumulated_phase(PlacementState& state, std::size_t antenna) {
  const auto& h = state.accumulated[antenna];
  state.accumulated_phase_rad[antenna] =
      (std::abs(h) == 0.0) ? 0.0 : wrap_two_pi(-std::arg(h));
}

}  // namespace detail

// Seed the state with the center antenna already placed.
inline PlacementState make_placement_state(const WaveguideParams& wg,
                                           const UserArray& user, int pa_count,
                                           double center_x_m) {
  if (pa_count < 1) throw argument_error("pa_count must be >= 1");
  PlacementState state;
  state.pa_count = pa_count;
  state.center_index = (pa_count + 1) / 2;
  state.right_frontier_m = center_x_m;
  state.left_frontier_m = center_x_m;
  const std::size_t m_count = user.count();
  state.accumulated.resize(m_count);
  state.accumulated_phase_rad.resize(m_count);
  state.exact_aggregate.resize(m_count);
  state.amplitude_scale.resize(m_count);
  for (std::size_t m = 0; m < m_count; ++m) {
    const double lateral = user.x_m[m] - center_x_m;
    state.amplitude_scale[m] = std::sqrt(
        wg.eta_m2 / (lateral * lateral + user.distance_m * user.distance_m));
    const double theta = phase_delay(wg, user, m, center_x_m);
    state.accumulated[m] = std::polar(state.amplitude_scale[m], -theta);
    state.exact_aggregate[m] = channel_coefficient(wg, user, m, center_x_m);
    detail::refresh_accumulated_phase(state, m);
  }
  state.placed.emplace(state.center_index, center_x_m);
  return state;
}

// Feasible-region boundary for the next antenna: the frontier on its side of
// the center, offset by the half-wavelength coupling gap. The "previous"
// antenna is the previously deployed neighbor on the same side.
inline double reference_position(const PlacementState& state, int pa_index,
                                 const WaveguideParams& wg) {
  if (pa_index < 1 || pa_index > state.pa_count) {
    throw argument_error("PA index out of range");
  }
  if (pa_index == state.center_index) {
    throw state_error("center antenna has no reference position");
  }
  if (state.placed.contains(pa_index)) throw state_error("PA already placed");
  const bool rightward = pa_index > state.center_index;
  const int neighbor = rightward ? pa_index - 1 : pa_index + 1;
  if (!state.placed.contains(neighbor)) {
    throw state_error("inward neighbor has not been placed yet");
  }
  return rightward ? state.right_frontier_m + 0.5 * wg.wavelength_m
                   : state.left_frontier_m - 0.5 * wg.wavelength_m;
}

// Candidate alignments for antenna `antenna` when placing PA `pa_index`,
// targeting the accumulated channel phase.
inline CandidateSet candidate_positions(const PlacementState& state, int pa_index,
                                        std::size_t antenna, int count,
                                        const WaveguideParams& wg,
                                        const UserArray& user) {
  const double reference = reference_position(state, pa_index, wg);
  return aligned_candidates(wg, user, antenna, state.accumulated_phase_rad.at(antenna),
                            reference, pa_index > state.center_index, count);
}

struct SpanSelection {
  std::vector<double> chosen;  // one position per candidate set, input order
  double span_m = 0.0;
  double midpoint_m = 0.0;
};

// Smallest window (by x extent) over the merged candidate list that covers
// every set, found with a sliding window over the sorted positions. Ties go
// to the first minimal window in the left-to-right scan.
inline SpanSelection min_span_select(std::span<const CandidateSet> sets) {
  if (sets.empty()) throw argument_error("min_span_select needs at least one set");
  struct Item {
    double x;
    std::size_t set_index;
  };
  std::vector<Item> items;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].candidates.empty()) {
      throw argument_error("min_span_select: empty candidate set");
    }
    for (const auto& c : sets[i].candidates) items.push_back({c.x_m, i});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return a.x < b.x || (a.x == b.x && a.set_index < b.set_index);
  });

  std::vector<int> occupancy(sets.size(), 0);
  std::size_t covered = 0;
  bool found = false;
  double best_span = std::numeric_limits<double>::infinity();
  std::size_t best_lo = 0;
  std::size_t best_hi = 0;
  std::size_t lo = 0;
  for (std::size_t hi = 0; hi < items.size(); ++hi) {
    if (++occupancy[items[hi].set_index] == 1) ++covered;
    while (covered == sets.size()) {
      const double span = items[hi].x - items[lo].x;
      if (!found || span < best_span) {
        found = true;
        best_span = span;
        best_lo = lo;
        best_hi = hi;
      }
      if (--occupancy[items[lo].set_index] == 0) --covered;
      ++lo;
    }
  }

  SpanSelection selection;
  selection.span_m = best_span;
  selection.midpoint_m = 0.5 * (items[best_lo].x + items[best_hi].x);
  selection.chosen.assign(sets.size(), 0.0);
  std::vector<bool> taken(sets.size(), false);
  for (std::size_t i = best_lo; i <= best_hi; ++i) {
    if (!taken[items[i].set_index]) {
      taken[items[i].set_index] = true;
      selection.chosen[items[i].set_index] = items[i].x;
    }
  }
  return selection;
}

// Gain components if one more antenna were added at x, with exact channel
// coefficients against the already-placed set.
inline double prospective_gain(const PlacementState& state, const WaveguideParams& wg,
                               const UserArray& user, double x_m,
                               std::vector<double>* per_antenna = nullptr) {
  if (per_antenna) per_antenna->assign(user.count(), 0.0);
  double total = 0.0;
  for (std::size_t m = 0; m < user.count(); ++m) {
    const double g = std::norm(state.exact_aggregate[m] +
                               channel_coefficient(wg, user, m, x_m));
    if (per_antenna) (*per_antenna)[m] = g;
    total += g;
  }
  return total;
}

inline double placed_gain(const PlacementState& state) {
  double total = 0.0;
  for (const auto& h : state.exact_aggregate) total += std::norm(h);
  return total;
}

// Commit a position: record it, extend both channel accumulators with the
// exact phase at x, and advance the frontier on its side.
inline void apply_placement(PlacementState& state, int pa_index, double x_m,
                            const WaveguideParams& wg, const UserArray& user) {
  state.placed.emplace(pa_index, x_m);
  for (std::size_t m = 0; m < user.count(); ++m) {
    const double theta = phase_delay(wg, user, m, x_m);
    state.accumulated[m] += std::polar(state.amplitude_scale[m], -theta);
    state.exact_aggregate[m] += channel_coefficient(wg, user, m, x_m);
    detail::refresh_accumulated_phase(state, m);
  }
  if (pa_index > state.center_index) {
    state.right_frontier_m = x_m;
  } else if (pa_index < state.center_index) {
    state.left_frontier_m = x_m;
  }
}

struct StepDiagnostics {
  int step = 0;  // 1-based position in the deployment order
  int pa_index = 0;
  double x_m = 0.0;
  double reference_x_m = 0.0;
  bool clamped = false;  // midpoint fell inside the coupling gap
  std::vector<CandidateSet> candidate_sets;
  SpanSelection selection;
  double gain_after = 0.0;  // exact sum_m |aggregate_m|^2 over placed antennas
};

// One step of the compressed deployment: per-antenna candidates, minimum-span
// selection, placement at the window midpoint.
//
// Leftward steps run the span selection on mirrored coordinates so the
// scan-order tie-break selects the window nearest the reference on either
// branch; span and midpoint are mirror-invariant.
inline StepDiagnostics place_next(PlacementState& state, int pa_index, int count,
                                  const WaveguideParams& wg, const UserArray& user) {
  const auto order = deployment_order(state.pa_count);
  if (state.placed.size() >= order.size()) throw state_error("all PAs already placed");
  if (order[state.placed.size()] != pa_index) {
    throw state_error("PA placed out of deployment order");
  }

  const bool rightward = pa_index > state.center_index;
  StepDiagnostics diag;
  diag.step = static_cast<int>(state.placed.size()) + 1;
  diag.pa_index = pa_index;
  diag.reference_x_m = reference_position(state, pa_index, wg);
  diag.candidate_sets.reserve(user.count());
  for (std::size_t m = 0; m < user.count(); ++m) {
    diag.candidate_sets.push_back(aligned_candidates(
        wg, user, m, state.accumulated_phase_rad[m], diag.reference_x_m, rightward,
        count));
  }

  if (rightward) {
    diag.selection = min_span_select(diag.candidate_sets);
  } else {
    std::vector<CandidateSet> mirrored = diag.candidate_sets;
    for (auto& set : mirrored) {
      std::reverse(set.candidates.begin(), set.candidates.end());
      for (auto& c : set.candidates) c.x_m = -c.x_m;
    }
    diag.selection = min_span_select(mirrored);
    diag.selection.midpoint_m = -diag.selection.midpoint_m;
    for (auto& x : diag.selection.chosen) x = -x;
  }

  double x = diag.selection.midpoint_m;
  if (rightward && x < diag.reference_x_m) {
    x = diag.reference_x_m;
    diag.clamped = true;
  } else if (!rightward && x > diag.reference_x_m) {
    x = diag.reference_x_m;
    diag.clamped = true;
  }
  diag.x_m = x;

  apply_placement(state, pa_index, x, wg, user);
  diag.gain_after = placed_gain(state);
  return diag;
}

}  // namespace pas

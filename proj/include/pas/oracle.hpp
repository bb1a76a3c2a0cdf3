#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "pas/placement.hpp"

namespace pas {

// Brute-force verifiers. Everything here is deliberately dumb: dense grids,
// full enumeration, centered differences. Used as ground truth by the tests
// and the acceptance suite; never by the placement schemes themselves, except
// for the explicit grid-search scheme.

struct GridSpec {
  double lo_m = 0.0;
  double hi_m = 0.0;
  double step_m = 0.0;

  std::size_t point_count() const {
    return static_cast<std::size_t>(std::floor((hi_m - lo_m) / step_m + 1e-9)) + 1;
  }

  void validate() const {
    if (!(lo_m < hi_m)) throw argument_error("grid lo must be below hi");
    if (!(step_m > 0.0)) throw argument_error("grid step must be positive");
    if ((hi_m - lo_m) / step_m > 1e7) throw argument_error("grid too fine (cost guard)");
  }
};

// Argmax of f over the grid; first occurrence wins on exact ties.
template <typename F>
std::pair<double, double> grid_argmax(F&& f, const GridSpec& grid) {
  grid.validate();
  const std::size_t n = grid.point_count();
  double best_x = grid.lo_m;
  double best_v = f(grid.lo_m);
  for (std::size_t i = 1; i < n; ++i) {
    const double x = grid.lo_m + static_cast<double>(i) * grid.step_m;
    const double v = f(x);
    if (v > best_v) {
      best_v = v;
      best_x = x;
    }
  }
  return {best_x, best_v};
}

// Repeated grid refinement around the running argmax until the grid step
// drops below `resolution_m`. Independent of any search the library performs.
template <typename F>
double refined_grid_argmax(F&& f, double lo, double hi, std::size_t points_per_round,
                           double resolution_m) {
  if (points_per_round < 3) throw argument_error("need at least 3 points per round");
  double step = (hi - lo) / static_cast<double>(points_per_round - 1);
  double best = lo;
  for (int round = 0; round < 64; ++round) {
    double best_v = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < points_per_round; ++i) {
      const double x = lo + static_cast<double>(i) * step;
      const double v = f(x);
      if (v > best_v) {
        best_v = v;
        best = x;
      }
    }
    if (step <= resolution_m) break;
    lo = best - step;
    hi = best + step;
    step = (hi - lo) / static_cast<double>(points_per_round - 1);
  }
  return best;
}

// Ground truth for one deployment step: exact gain at every grid point.
// The grid must lie on the feasible side of the next antenna's reference.
inline std::pair<double, double> grid_argmax_gain(const PlacementState& state,
                                                  int pa_index, const GridSpec& grid,
                                                  const WaveguideParams& wg,
                                                  const UserArray& user) {
  grid.validate();
  const double reference = reference_position(state, pa_index, wg);
  const bool rightward = pa_index > state.center_index;
  constexpr double slack = 1e-9;
  if (rightward && grid.lo_m < reference - slack) {
    throw argument_error("grid extends into the coupling gap");
  }
  if (!rightward && grid.hi_m > reference + slack) {
    throw argument_error("grid extends into the coupling gap");
  }
  return grid_argmax(
      [&](double x) { return prospective_gain(state, wg, user, x); }, grid);
}

// Exhaustive minimum-span selection: every way of picking one candidate per
// set. Ties go to the lexicographically smallest index tuple. Ground truth
// for the sliding-window selection.
inline SpanSelection exhaustive_min_span(std::span<const CandidateSet> sets) {
  if (sets.empty()) throw argument_error("exhaustive_min_span needs at least one set");
  double combinations = 1.0;
  for (const auto& set : sets) {
    if (set.candidates.empty()) {
      throw argument_error("exhaustive_min_span: empty candidate set");
    }
    combinations *= static_cast<double>(set.candidates.size());
    if (combinations > 1e6) throw argument_error("too many combinations (cost guard)");
  }

  std::vector<std::size_t> index(sets.size(), 0);
  SpanSelection best;
  best.span_m = std::numeric_limits<double>::infinity();
  std::vector<double> chosen(sets.size());
  while (true) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < sets.size(); ++i) {
      chosen[i] = sets[i].candidates[index[i]].x_m;
      lo = std::min(lo, chosen[i]);
      hi = std::max(hi, chosen[i]);
    }
    if (hi - lo < best.span_m) {
      best.span_m = hi - lo;
      best.midpoint_m = 0.5 * (lo + hi);
      best.chosen = chosen;
    }
    // odometer increment, last set varies fastest: lexicographic tuple order
    std::size_t pos = sets.size();
    while (pos-- > 0) {
      if (++index[pos] < sets[pos].candidates.size()) break;
      index[pos] = 0;
      if (pos == 0) return best;
    }
  }
}

// Centered difference (f(x+h) - f(x-h)) / 2h.
template <typename F>
double finite_difference(F&& f, double x, double h) {
  if (!(h > 0.0)) throw argument_error("finite difference step must be positive");
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace pas

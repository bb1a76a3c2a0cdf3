#pragma once

#include <algorithm>
#include <cmath>

#include "pas/scenario.hpp"

namespace pas {

// Aggregated inverse path loss from a point at x on the waveguide to every
// receive antenna: sum_m 1 / ((x - x_m)^2 + d^2).
inline double inverse_path_loss(const UserArray& user, double x) {
  const double d2 = user.distance_m * user.distance_m;
  double sum = 0.0;
  for (double xm : user.x_m) {
    const double dx = x - xm;
    sum += 1.0 / (dx * dx + d2);
  }
  return sum;
}

inline double inverse_path_loss_derivative(const UserArray& user, double x) {
  const double d2 = user.distance_m * user.distance_m;
  double sum = 0.0;
  for (double xm : user.x_m) {
    const double dx = x - xm;
    const double denom = dx * dx + d2;
    sum += 2.0 * (xm - x) / (denom * denom);
  }
  return sum;
}

inline double inverse_path_loss_second_derivative(const UserArray& user, double x) {
  const double d2 = user.distance_m * user.distance_m;
  double sum = 0.0;
  for (double xm : user.x_m) {
    const double dx = x - xm;
    const double denom = dx * dx + d2;
    sum += (6.0 * dx * dx - 2.0 * d2) / (denom * denom * denom);
  }
  return sum;
}

enum class CenterMethod { symmetric_closed_form, ternary_search, grid_refined };

struct CenterSolution {
  double x_center_m = 0.0;
  double l_value = 0.0;  // inverse_path_loss at x_center_m
  CenterMethod method = CenterMethod::symmetric_closed_form;
  bool concavity_certified = false;
};

namespace detail {

// Ternary search for the maximum of a unimodal f over [lo, hi].
template <typename F>
double ternary_max(F&& f, double lo, double hi, double tolerance) {
  int guard = 500;
  while (hi - lo > tolerance && guard-- > 0) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (f(m1) < f(m2)) {
      lo = m1;
    } else {
      hi = m2;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

// First-layer optimum: the x-coordinate maximizing the aggregated inverse
// path loss over [x_1, x_M].
//
// Exactly symmetric arrays (pairwise mirror test with 1e-12 m slack) take the
// closed-form midpoint. Arrays whose span is below d/sqrt(3) are strictly
// concave over the interval, so plain ternary search suffices and the result
// carries a concavity certificate. Wider arrays may be multimodal: a coarse
// grid scan (step = 100 * tolerance, floored at 1e-4 m) locates the best
// cell, refined by ternary search inside it.
inline CenterSolution optimize_center(const UserArray& user, double tolerance_m = 1e-7) {
  if (!(tolerance_m > 0.0)) throw argument_error("tolerance must be positive");
  const double lo = user.x_m.front();
  const double hi = user.x_m.back();
  const double mid = 0.5 * (lo + hi);
  const std::size_t m_count = user.count();

  bool symmetric = true;
  for (std::size_t i = 0; i < m_count; ++i) {
    if (std::abs(user.x_m[i] + user.x_m[m_count - 1 - i] - (lo + hi)) > 1e-12) {
      symmetric = false;
      break;
    }
  }
  const bool narrow_span = user.span_m() < user.distance_m / std::sqrt(3.0);
  if (symmetric) {
    return {mid, inverse_path_loss(user, mid), CenterMethod::symmetric_closed_form,
            narrow_span};
  }

  const auto l = [&user](double x) { return inverse_path_loss(user, x); };
  double best;
  CenterMethod method;
  if (narrow_span) {
    best = detail::ternary_max(l, lo, hi, tolerance_m);
    method = CenterMethod::ternary_search;
  } else {
    const double step = std::max(tolerance_m * 100.0, 1e-4);
    double best_x = lo;
    double best_l = l(lo);
    for (double x = lo + step; x < hi + step; x += step) {
      const double xc = std::min(x, hi);
      const double v = l(xc);
      if (v > best_l) {
        best_l = v;
        best_x = xc;
      }
    }
    best = detail::ternary_max(l, std::max(lo, best_x - step),
                               std::min(hi, best_x + step), tolerance_m);
    method = CenterMethod::grid_refined;
  }
  best = std::clamp(best, lo, hi);
  return {best, inverse_path_loss(user, best), method, narrow_span};
}

}  // namespace pas

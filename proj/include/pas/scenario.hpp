#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "pas/errors.hpp"
#include "pas/waveguide.hpp"

namespace pas {

// Receive antennas on a line parallel to the waveguide: x-coordinates in
// strictly increasing order, all at vertical distance `distance_m`.
struct UserArray {
  std::vector<double> x_m;
  double distance_m = 0.0;

  static UserArray make(std::vector<double> x_m, double distance_m) {
    if (x_m.empty()) {
      throw argument_error("user array needs at least one antenna");
    }
    if (!(distance_m > 0.0)) {
      throw argument_error("user distance must be positive");
    }
    for (std::size_t i = 1; i < x_m.size(); ++i) {
      if (!(x_m[i] > x_m[i - 1])) {
        throw argument_error("user antenna x-coordinates must be strictly increasing");
      }
    }
    UserArray user;
    user.x_m = std::move(x_m);
    user.distance_m = distance_m;
    return user;
  }

  std::size_t count() const { return x_m.size(); }
  double span_m() const { return x_m.back() - x_m.front(); }
  double center_x_m() const { return 0.5 * (x_m.front() + x_m.back()); }
};

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

struct LinkBudget {
  double power_w = 0.0;
  double noise_power_w = 0.0;

  static LinkBudget make(double power_w, double noise_power_w) {
    if (!(power_w > 0.0)) throw argument_error("transmit power must be positive");
    if (!(noise_power_w > 0.0)) throw argument_error("noise power must be positive");
    return LinkBudget{power_w, noise_power_w};
  }

  static LinkBudget from_dbm(double power_dbm, double noise_dbm) {
    return make(dbm_to_watts(power_dbm), dbm_to_watts(noise_dbm));
  }

  double transmit_snr() const { return power_w / noise_power_w; }
};

// One complete problem instance.
struct Scenario {
  WaveguideParams waveguide;
  UserArray user;
  int pa_count = 0;
  LinkBudget budget;

  static Scenario make(WaveguideParams waveguide, UserArray user, int pa_count,
                       LinkBudget budget) {
    if (pa_count < 1) throw argument_error("pa_count must be >= 1");
    return Scenario{std::move(waveguide), std::move(user), pa_count, budget};
  }
};

}  // namespace pas

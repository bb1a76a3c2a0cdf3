#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "pas/scenario.hpp"

namespace pas {

// Unwrapped phase accumulated from the feed point, along the waveguide to the
// radiation point at x, then through free space to receive antenna `antenna`:
//
//   2*pi/wavelength * |(x,0) - (x_m,d)|  +  2*pi/guided_wavelength * (x - x_f)
//
// Kept unwrapped; callers reduce mod 2*pi only where alignment targets need it.
inline double phase_delay(const WaveguideParams& wg, const UserArray& user,
                          std::size_t antenna, double x_m) {
  const double lateral = user.x_m.at(antenna) - x_m;
  return two_pi / wg.wavelength_m * std::hypot(lateral, user.distance_m) +
         two_pi / wg.guided_wavelength_m * (x_m - wg.feed_x_m);
}

// d(phase_delay)/dx with the exact lateral term. Always positive for
// n_eff >= 1; the linearized variant used for candidate generation is not.
inline double phase_delay_slope(const WaveguideParams& wg, const UserArray& user,
                                std::size_t antenna, double x_m) {
  const double lateral = x_m - user.x_m.at(antenna);
  return two_pi / wg.wavelength_m * lateral / std::hypot(lateral, user.distance_m) +
         two_pi / wg.guided_wavelength_m;
}

// Channel through one radiation point: amplitude sqrt(eta)/distance, phase
// -phase_delay.
inline std::complex<double> channel_coefficient(const WaveguideParams& wg,
                                                const UserArray& user,
                                                std::size_t antenna, double x_m) {
  const double lateral = user.x_m.at(antenna) - x_m;
  const double distance = std::hypot(lateral, user.distance_m);
  return std::polar(std::sqrt(wg.eta_m2) / distance,
                    -phase_delay(wg, user, antenna, x_m));
}

// Coherent sum over all radiation points, one entry per receive antenna.
inline std::vector<std::complex<double>> aggregate_channel(
    const WaveguideParams& wg, const UserArray& user,
    std::span<const double> positions_m) {
  if (positions_m.empty()) {
    throw argument_error("aggregate_channel needs at least one position");
  }
  std::vector<std::complex<double>> h(user.count());
  for (std::size_t m = 0; m < user.count(); ++m) {
    for (double x : positions_m) {
      h[m] += channel_coefficient(wg, user, m, x);
    }
  }
  return h;
}

// Received SNR after maximum ratio combining with the power split across the
// N radiation points applied here: (transmit_snr / N) * sum_m |h_m|^2.
inline double received_snr(const Scenario& scenario,
                           std::span<const double> positions_m) {
  if (static_cast<int>(positions_m.size()) != scenario.pa_count) {
    throw argument_error("positions length must equal pa_count");
  }
  const auto h = aggregate_channel(scenario.waveguide, scenario.user, positions_m);
  double gain = 0.0;
  for (const auto& hm : h) gain += std::norm(hm);
  return scenario.budget.transmit_snr() / static_cast<double>(scenario.pa_count) * gain;
}

inline double achievable_rate_bps_hz(const Scenario& scenario,
                                     std::span<const double> positions_m) {
  return std::log2(1.0 + received_snr(scenario, positions_m));
}

}  // namespace pas

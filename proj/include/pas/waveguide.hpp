#pragma once

#include <cmath>
#include <numbers>

#include "pas/errors.hpp"

namespace pas {

inline constexpr double speed_of_light_m_per_s = 2.99792458e8;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Carrier and waveguide constants, all derived from the carrier frequency,
// the effective refractive index of the waveguide, and the feed x-coordinate.
//
//   wavelength        = c / f_c
//   guided wavelength = wavelength / n_eff  (in-guide phase advances at
//                                            2*pi/guided_wavelength per meter)
//   eta               = c^2 / (16 pi^2 f_c^2) = (wavelength / 4 pi)^2,
//                       the free-space gain factor so that the channel
//                       amplitude is sqrt(eta) / distance.
struct WaveguideParams {
  double carrier_frequency_hz = 0.0;
  double effective_refractive_index = 0.0;
  double feed_x_m = 0.0;
  double wavelength_m = 0.0;
  double guided_wavelength_m = 0.0;
  double eta_m2 = 0.0;

  static WaveguideParams make(double carrier_frequency_hz,
                              double effective_refractive_index,
                              double feed_x_m = 0.0) {
    if (!(carrier_frequency_hz > 0.0)) {
      throw argument_error("carrier frequency must be positive");
    }
    if (!(effective_refractive_index >= 1.0)) {
      throw argument_error("effective refractive index must be >= 1");
    }
    WaveguideParams wg;
    wg.carrier_frequency_hz = carrier_frequency_hz;
    wg.effective_refractive_index = effective_refractive_index;
    wg.feed_x_m = feed_x_m;
    wg.wavelength_m = speed_of_light_m_per_s / carrier_frequency_hz;
    wg.guided_wavelength_m = wg.wavelength_m / effective_refractive_index;
    wg.eta_m2 = speed_of_light_m_per_s * speed_of_light_m_per_s /
                (16.0 * std::numbers::pi * std::numbers::pi *
                 carrier_frequency_hz * carrier_frequency_hz);
    return wg;
  }
};

// Defaults are assumptions (a conventional mmWave carrier and dielectric
// index); every public entry point accepts explicit values instead.
inline constexpr double default_carrier_frequency_hz = 28e9;
inline constexpr double default_refractive_index = 1.4;

inline WaveguideParams default_waveguide(double feed_x_m = 0.0) {
  return WaveguideParams::make(default_carrier_frequency_hz,
                               default_refractive_index, feed_x_m);
}

}  // namespace pas

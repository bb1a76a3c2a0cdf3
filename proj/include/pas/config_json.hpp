#pragma once

#include <algorithm>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pas/sweep.hpp"

namespace pas {

// Sweep/trace configuration file. Strict schema: unknown keys are rejected so
// a typo in a physics constant cannot silently fall back to a default.
//
// {
//   "scenario": {
//     "carrier_frequency_hz":       28e9,
//     "effective_refractive_index": 1.4,
//     "feed_x_m":                   0.0,
//     "user_x_m":                   [9.9, 10.1],
//     "user_distance_d_m":          4.0,
//     "pa_count_n":                 16,
//     "transmit_power_dbm":         30.0,
//     "noise_power_dbm":            -90.0
//   },
//   "sweep": { "axis": "transmit_power_dBm", "values": [10, 15, 20] },
//   "schemes": ["proposed", "benchmark"],
//   "candidates_per_antenna": 4,      // optional
//   "output_path": "out.csv",         // optional, CLI --out overrides
//   "seed": 1                         // optional, verification suites only
// }

namespace detail {

inline void reject_unknown_keys(const nlohmann::json& j,
                                std::initializer_list<const char*> allowed,
                                const std::string& prefix) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) {
          return key == a;
        }) == allowed.end()) {
      throw config_error(prefix + key, "unknown field '" + prefix + key + "'");
    }
  }
}

inline const nlohmann::json& require_field(const nlohmann::json& j, const char* key,
                                           const std::string& prefix) {
  if (!j.contains(key)) {
    throw config_error(prefix + key, "missing field '" + prefix + key + "'");
  }
  return j.at(key);
}

inline double number_field(const nlohmann::json& j, const char* key,
                           const std::string& prefix) {
  const auto& field = require_field(j, key, prefix);
  if (!field.is_number()) {
    throw config_error(prefix + key, "field '" + prefix + key + "' must be a number");
  }
  return field.get<double>();
}

}  // namespace detail

inline Scenario parse_scenario(const nlohmann::json& j) {
  if (!j.is_object()) throw config_error("scenario", "scenario must be an object");
  detail::reject_unknown_keys(
      j,
      {"carrier_frequency_hz", "effective_refractive_index", "feed_x_m", "user_x_m",
       "user_distance_d_m", "pa_count_n", "transmit_power_dbm", "noise_power_dbm"},
      "scenario.");
  const std::string p = "scenario.";
  const double f_c = detail::number_field(j, "carrier_frequency_hz", p);
  const double n_eff = detail::number_field(j, "effective_refractive_index", p);
  const double feed_x = detail::number_field(j, "feed_x_m", p);
  const auto& user_x = detail::require_field(j, "user_x_m", p);
  if (!user_x.is_array() || user_x.empty()) {
    throw config_error("scenario.user_x_m", "user_x_m must be a non-empty array");
  }
  std::vector<double> xs;
  xs.reserve(user_x.size());
  for (const auto& v : user_x) {
    if (!v.is_number()) {
      throw config_error("scenario.user_x_m", "user_x_m entries must be numbers");
    }
    xs.push_back(v.get<double>());
  }
  const double d = detail::number_field(j, "user_distance_d_m", p);
  const double n = detail::number_field(j, "pa_count_n", p);
  if (n < 1 || n != std::floor(n)) {
    throw config_error("scenario.pa_count_n", "pa_count_n must be a positive integer");
  }
  const double power_dbm = detail::number_field(j, "transmit_power_dbm", p);
  const double noise_dbm = detail::number_field(j, "noise_power_dbm", p);
  try {
    return Scenario::make(WaveguideParams::make(f_c, n_eff, feed_x),
                          UserArray::make(std::move(xs), d), static_cast<int>(n),
                          LinkBudget::from_dbm(power_dbm, noise_dbm));
  } catch (const argument_error& e) {
    throw config_error("scenario", e.what());
  }
}

inline SweepConfig parse_sweep_config(const nlohmann::json& j) {
  if (!j.is_object()) throw config_error("", "config root must be an object");
  detail::reject_unknown_keys(j,
                              {"scenario", "sweep", "schemes", "candidates_per_antenna",
                               "output_path", "seed"},
                              "");
  SweepConfig config;
  config.base = parse_scenario(detail::require_field(j, "scenario", ""));

  if (j.contains("sweep")) {
    const auto& sweep = j.at("sweep");
    if (!sweep.is_object()) throw config_error("sweep", "sweep must be an object");
    detail::reject_unknown_keys(sweep, {"axis", "values"}, "sweep.");
    const auto& axis = detail::require_field(sweep, "axis", "sweep.");
    if (!axis.is_string()) {
      throw config_error("sweep.axis", "sweep.axis must be a string");
    }
    try {
      config.axis = parse_axis(axis.get<std::string>());
    } catch (const argument_error& e) {
      throw config_error("sweep.axis", e.what());
    }
    const auto& values = detail::require_field(sweep, "values", "sweep.");
    if (!values.is_array() || values.empty()) {
      throw config_error("sweep.values", "sweep.values must be a non-empty array");
    }
    for (const auto& v : values) {
      if (!v.is_number()) {
        throw config_error("sweep.values", "sweep.values entries must be numbers");
      }
      config.axis_values.push_back(v.get<double>());
    }
    for (std::size_t i = 1; i < config.axis_values.size(); ++i) {
      if (!(config.axis_values[i] > config.axis_values[i - 1])) {
        throw config_error("sweep.values", "sweep.values must be strictly increasing");
      }
    }
    if (*config.axis == SweepAxis::pa_count ||
        *config.axis == SweepAxis::user_antenna_count) {
      for (double v : config.axis_values) {
        if (v < 1 || std::abs(v - std::llround(v)) > 1e-9) {
          throw config_error("sweep.values", "axis values must be positive integers");
        }
      }
    }
  }

  if (j.contains("schemes")) {
    const auto& schemes = j.at("schemes");
    if (!schemes.is_array() || schemes.empty()) {
      throw config_error("schemes", "schemes must be a non-empty array");
    }
    for (const auto& s : schemes) {
      if (!s.is_string()) throw config_error("schemes", "schemes entries must be strings");
      try {
        config.schemes.push_back(parse_scheme(s.get<std::string>()));
      } catch (const argument_error& e) {
        throw config_error("schemes", e.what());
      }
    }
    // canonical row order: sorted by scheme name, duplicates dropped
    std::sort(config.schemes.begin(), config.schemes.end(),
              [](SchemeTag a, SchemeTag b) {
                return std::string(scheme_name(a)) < scheme_name(b);
              });
    config.schemes.erase(std::unique(config.schemes.begin(), config.schemes.end()),
                         config.schemes.end());
  } else {
    config.schemes = {SchemeTag::proposed};
  }

  if (j.contains("candidates_per_antenna")) {
    const auto& z = j.at("candidates_per_antenna");
    if (!z.is_number_integer() || z.get<long long>() < 1) {
      throw config_error("candidates_per_antenna",
                         "candidates_per_antenna must be a positive integer");
    }
    config.candidates_per_antenna = z.get<int>();
  }
  if (j.contains("output_path")) {
    const auto& path = j.at("output_path");
    if (!path.is_string()) {
      throw config_error("output_path", "output_path must be a string");
    }
    config.output_path = path.get<std::string>();
  }
  if (j.contains("seed")) {
    const auto& seed = j.at("seed");
    if (!seed.is_number_unsigned() && !seed.is_number_integer()) {
      throw config_error("seed", "seed must be an integer");
    }
    if (seed.is_number_integer() && seed.get<long long>() < 0) {
      throw config_error("seed", "seed must be non-negative");
    }
    config.seed = seed.get<std::uint64_t>();
  }
  return config;
}

inline SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("", "cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw config_error("", std::string("config is not valid JSON: ") + e.what());
  }
  return parse_sweep_config(j);
}

}  // namespace pas

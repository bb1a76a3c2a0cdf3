#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pas {

// Bad argument values: empty inputs, non-positive tolerances, size mismatches.
struct argument_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Operation applied to a placement state that is not ready for it.
struct state_error : std::logic_error {
  using std::logic_error::logic_error;
};

// The linearized phase model does not hold for the requested geometry.
// Surfaced instead of silently patching the slope.
struct model_violation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Configuration problems; carries the offending field path for CLI reporting.
struct config_error : std::runtime_error {
  std::string field;

  config_error(std::string field_path, const std::string& message)
      : std::runtime_error(message), field(std::move(field_path)) {}
};

}  // namespace pas

#pragma once

#include <stdexcept>
#include <string>

namespace elmid {

// Invalid dimensions, malformed configuration, non-Hurwitz design matrix.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Floating-point hygiene failure, e.g. a covariance that lost symmetry.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A simulated state stopped being finite. Carries the time and the state
// norm observed at detection.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(double t, double state_norm, const std::string& what)
      : std::runtime_error(what), t_(t), state_norm_(state_norm) {}

  double t() const { return t_; }
  double state_norm() const { return state_norm_; }

 private:
  double t_;
  double state_norm_;
};

}  // namespace elmid

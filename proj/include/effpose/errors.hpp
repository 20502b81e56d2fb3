#pragma once

#include <stdexcept>
#include <string>

namespace effpose {

/// Invalid user-supplied configuration (unknown frame, bad hyperparameter, ...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical routine (quadrature, factorization) failed to converge.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every particle ended up with vanishing likelihood; the weights are unusable.
class DegenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace effpose

#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>

namespace effpose {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Normalizes an angle to [-pi, pi). Exactly +pi maps to -pi.
inline double wrap_angle(double x) {
  double y = std::fmod(x + kPi, kTwoPi);
  if (y < 0.0) y += kTwoPi;
  return y - kPi;
}

/// Absolute circular distance between two angles, in [0, pi].
inline double circular_distance(double a, double b) {
  return std::abs(wrap_angle(a - b));
}

/// atan2 of the summed sines and cosines, in [-pi, pi).
/// Throws std::domain_error when both component sums vanish (antipodal or
/// uniform input has no defined mean).
inline double circular_mean(std::span<const double> angles) {
  if (angles.empty()) throw std::domain_error("circular_mean: empty input");
  double s = 0.0, c = 0.0;
  for (double a : angles) {
    s += std::sin(a);
    c += std::cos(a);
  }
  const double tol = 1e-9 * static_cast<double>(angles.size());
  if (std::abs(s) < tol && std::abs(c) < tol)
    throw std::domain_error("circular_mean: undefined (component sums vanish)");
  return wrap_angle(std::atan2(s, c));
}

/// Weighted circular mean; weights need not be normalized but must be >= 0.
inline double circular_mean(std::span<const double> angles,
                            std::span<const double> weights) {
  if (angles.empty() || angles.size() != weights.size())
    throw std::domain_error("circular_mean: size mismatch");
  double s = 0.0, c = 0.0, wsum = 0.0;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    s += weights[i] * std::sin(angles[i]);
    c += weights[i] * std::cos(angles[i]);
    wsum += weights[i];
  }
  const double tol = 1e-9 * wsum;
  if (std::abs(s) < tol && std::abs(c) < tol)
    throw std::domain_error("circular_mean: undefined (component sums vanish)");
  return wrap_angle(std::atan2(s, c));
}

}  // namespace effpose

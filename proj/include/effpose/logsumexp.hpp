#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

namespace effpose {

/// log(sum_i exp(v[i])) computed against the running maximum so that huge
/// negative log-likelihoods do not underflow.
inline double log_sum_exp(std::span<const double> v) {
  if (v.empty()) return -std::numeric_limits<double>::infinity();
  const double m = *std::max_element(v.begin(), v.end());
  if (!std::isfinite(m)) return m;  // all -inf (or a NaN poisoned the max)
  double s = 0.0;
  for (double x : v) s += std::exp(x - m);
  return m + std::log(s);
}

}  // namespace effpose

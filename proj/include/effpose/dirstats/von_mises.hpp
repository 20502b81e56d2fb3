#pragma once

#include <stdexcept>

#include "effpose/angles.hpp"
#include "effpose/rng.hpp"

namespace effpose::dirstats {

/// von Mises distribution VM(kappa, theta0) on [-pi, pi).
struct VonMisesParams {
  double kappa = 0.0;   // concentration, >= 0
  double theta0 = 0.0;  // mode angle

  VonMisesParams(double kappa_, double theta0_) : kappa(kappa_), theta0(wrap_angle(theta0_)) {
    if (!(kappa >= 0.0)) throw std::invalid_argument("VonMisesParams: kappa must be >= 0");
  }
};

/// ln I0(kappa), the modified Bessel function of the first kind, order zero.
/// Ascending series below kappa = 15, asymptotic expansion above; both branches
/// stay in log space so large concentrations do not overflow.
double log_bessel_i0(double kappa);

/// kappa*cos(x - theta0) - ln(2*pi*I0(kappa)); periodic with period 2*pi.
double vm_log_density(double x, const VonMisesParams& p);

/// Exact draw in [-pi, pi) via the Best-Fisher rejection sampler.
double vm_sample(const VonMisesParams& p, Rng& rng);

}  // namespace effpose::dirstats

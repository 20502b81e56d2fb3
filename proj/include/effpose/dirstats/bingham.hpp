#pragma once

#include <Eigen/Dense>

namespace effpose::dirstats {

/// Bingham distribution on S^3: density proportional to
/// exp(x^T D diag(lambda) D^T x), antipodally symmetric.
///
/// Parameters are stored as given (the unnormalized density is evaluated with
/// the raw lambda so the shift identity is observable); canonicalized() sorts
/// lambda ascending and shifts the largest entry to zero.
struct BinghamParams {
  Eigen::Matrix4d dmat = Eigen::Matrix4d::Identity();
  Eigen::Vector4d lambda = Eigen::Vector4d::Zero();

  BinghamParams() = default;
  BinghamParams(Eigen::Matrix4d d, Eigen::Vector4d l);

  BinghamParams canonicalized() const;

  /// Axis-symmetric parameters (-s, -s, 0, 0) with D = I: density constant
  /// under rotations about the z axis.
  static BinghamParams axis_symmetric_z(double strength);
};

/// x^T D diag(lambda) D^T x. The normalizing constant is omitted: every
/// particle shares the same lambda, so it cancels in the weight normalization.
/// Throws std::domain_error unless x is unit within 1e-6.
double bingham_unnorm_log_density(const Eigen::Vector4d& x, const BinghamParams& p);

/// ln C(lambda) with C the normalizing constant, computed by adaptive product
/// quadrature over hyperspherical coordinates. Independent of D (rotation
/// invariance). Needed only for standalone density evaluation, never by the
/// filter. Throws NumericalError if the quadrature does not converge.
double bingham_log_normalizer(const Eigen::Vector4d& lambda);

}  // namespace effpose::dirstats

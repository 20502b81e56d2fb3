#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Dense>

namespace effpose::dirstats {

/// Multivariate normal with a cached Cholesky factorization.
/// Construction throws std::invalid_argument if sigma is not symmetric
/// positive definite.
class GaussianParams {
 public:
  GaussianParams(Eigen::VectorXd mu, Eigen::MatrixXd sigma);

  const Eigen::VectorXd& mean() const { return mu_; }
  const Eigen::MatrixXd& covariance() const { return sigma_; }
  int dim() const { return static_cast<int>(mu_.size()); }

  double log_density(const Eigen::VectorXd& x) const;

 private:
  Eigen::VectorXd mu_;
  Eigen::MatrixXd sigma_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
  double log_norm_ = 0.0;  // -(m/2) ln(2 pi) - (1/2) ln det(sigma)
};

inline double gaussian_log_density(const Eigen::VectorXd& x, const GaussianParams& p) {
  return p.log_density(x);
}

}  // namespace effpose::dirstats

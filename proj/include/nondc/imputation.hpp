#pragma once

#include <Eigen/Core>

#include "nondc/covariance.hpp"
#include "nondc/data.hpp"
#include "nondc/solver.hpp"

namespace nondc {

using BoolVec = Eigen::Array<bool, Eigen::Dynamic, 1>;

// Multivariate-normal model used to fill incomplete rows by conditional
// expectation. sigma must be symmetric and non-negative definite.
class GaussianImputer {
 public:
  GaussianImputer(Eigen::VectorXd mu, Eigen::MatrixXd sigma, double pinv_tol = 1e-10);

  // Construction path for matrices whose spectrum is known non-negative
  // by how they were assembled; skips the eigenvalue check.
  static GaussianImputer trusted(Eigen::VectorXd mu, Eigen::MatrixXd sigma,
                                 double pinv_tol = 1e-10);

  const Eigen::VectorXd& mu() const { return mu_; }
  const Eigen::MatrixXd& sigma() const { return sigma_; }
  double pinv_tol() const { return pinv_tol_; }
  Eigen::Index dim() const { return mu_.size(); }

 private:
  GaussianImputer() = default;
  Eigen::VectorXd mu_;
  Eigen::MatrixXd sigma_;
  double pinv_tol_ = 1e-10;
};

// Replace each missing cell by its column's observed mean. Throws
// DegenerateColumnError for all-missing columns.
Eigen::MatrixXd mean_impute(const ObservedMatrix& x);

// Sigma_est = c_zz + (|min(lambda_min, 0)| + lambda*(1-alpha)) I with
// mu = 0 (training means are absorbed by standardization).
GaussianImputer build_sigma_est(const CovarianceEstimate& c, const PenaltyConfig& cfg);

// Fill the missing block of one row with its conditional mean given the
// observed coordinates. Near-singular observed blocks (possible at
// alpha = 1) fall back to an eigenvalue-truncated pseudo-inverse with
// tolerance pinv_tol * (largest eigenvalue). A row with nothing observed
// comes back as mu; observed coordinates always pass through unchanged.
Eigen::VectorXd conditional_impute(const GaussianImputer& imp, const Eigen::VectorXd& row,
                                   const BoolVec& observed);

// Row-wise conditional_impute.
Eigen::MatrixXd impute_test_matrix(const GaussianImputer& imp, const ObservedMatrix& x_test);

namespace detail {
// Test hook: force the direct-solve or pseudo-inverse path instead of
// auto-detecting conditioning.
Eigen::VectorXd conditional_impute_forced(const GaussianImputer& imp, const Eigen::VectorXd& row,
                                          const BoolVec& observed, bool force_pinv);
}  // namespace detail

}  // namespace nondc

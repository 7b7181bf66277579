#pragma once

#include <Eigen/Core>

#include "nondc/data.hpp"

namespace nondc {

// Observed counts per column (n_j) and per column pair (n_jk).
struct PairwiseCounts {
  Eigen::VectorXi n_j;
  Eigen::MatrixXi n_jk;  // symmetric, diagonal equals n_j
};

PairwiseCounts pairwise_counts(const ObservedMatrix& x);

// The quadratic-objective coefficients estimated from incomplete data.
// eta interpolates between the pairwise-deletion unbiased estimator
// (eta = 0) and the mean-imputation Gram form (eta = 1):
//   c_zz[j][k] = (1-eta) <Z_j,Z_k>/n_jk + eta <Z_j,Z_k>/N
// and likewise for the diagonal (n_j) and c_yz (n_j). lambda_min caches
// the smallest eigenvalue of c_zz.
struct CovarianceEstimate {
  Eigen::MatrixXd c_zz;
  Eigen::VectorXd c_yz;
  double y_sq_norm = 0.0;
  double lambda_min = 0.0;
  double eta = 0.0;
  PairwiseCounts counts;
};

// Throws ZeroOverlapError when eta < 1 and some needed overlap count is
// zero (the unbiased entry is undefined there).
CovarianceEstimate covariance_estimate(const ObservedMatrix& x, const ResponseVector& y,
                                       double eta);

// Admissible penalty ranges derived from the estimate:
//   lambda*alpha beyond lambda_alpha_max forces beta = 0;
//   lambda*(1-alpha) must exceed lambda_min_required for convexity.
struct ParameterRange {
  double lambda_alpha_max = 0.0;
  double alpha_max = 1.0;
  double lambda_min_required = 0.0;
};

ParameterRange parameter_range(const CovarianceEstimate& c);

// Smallest eigenvalue of a symmetric matrix. Throws ContractViolation if
// the input is asymmetric beyond 1e-10.
double min_eigenvalue(const Eigen::MatrixXd& m);

}  // namespace nondc

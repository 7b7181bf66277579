#pragma once

#include <Eigen/Core>
#include <vector>

#include "nondc/covariance.hpp"

namespace nondc {

struct PenaltyConfig {
  double lambda = 0.0;  // >= 0
  double alpha = 1.0;   // in [0, 1]; 1 = pure l1, 0 = pure ridge
};

struct SolverConfig {
  double tol = 1e-8;          // max absolute coefficient change per sweep
  int max_sweeps = 10000;
  bool enforce_convexity = true;
  bool track_objective = false;  // record the objective after every sweep
};

struct FitResult {
  Eigen::VectorXd beta;
  double intercept = 0.0;  // always 0 in standardized coordinates
  int sweeps = 0;
  bool converged = false;
  double objective = 0.0;
  double kkt_violation = 0.0;
  std::vector<double> objective_path;  // filled when track_objective is set
};

// sign(z) * max(|z| - gamma, 0); returns exactly 0 at |z| == gamma.
double soft_threshold(double z, double gamma);

// 1/2 (b' C_zz b - 2 c_yz' b + |Y|^2) + lambda (alpha |b|_1 + (1-alpha)/2 |b|_2^2)
double evaluate_objective(const CovarianceEstimate& c, const Eigen::VectorXd& beta,
                          const PenaltyConfig& cfg);

// Max stationarity residual of the objective at beta: at beta_j = 0 the
// residual must lie inside [-lambda*alpha, lambda*alpha]; at beta_j != 0
// it must equal lambda*alpha*sign(beta_j).
double kkt_violation(const CovarianceEstimate& c, const Eigen::VectorXd& beta,
                     const PenaltyConfig& cfg);

// Cyclic coordinate descent with soft-thresholding:
//   beta_j <- S(c_yz[j] - sum_{k != j} c_zz[j][k] beta_k, lambda*alpha)
//             / (c_zz[j][j] + lambda*(1-alpha)).
// With enforce_convexity, requires lambda*(1-alpha) > max(0, -lambda_min)
// (up to 1e-12) and throws NonConvexError otherwise.
FitResult fit(const CovarianceEstimate& c, const PenaltyConfig& cfg,
              const SolverConfig& sc = {}, const Eigen::VectorXd* beta_init = nullptr);

// One fit per (alpha, lambda) pair; lambdas must be non-increasing and
// each fit warm-starts from the previous lambda's solution at the same
// alpha.
std::vector<FitResult> fit_path(const CovarianceEstimate& c, const std::vector<double>& alphas,
                                const std::vector<double>& lambdas, const SolverConfig& sc = {});

}  // namespace nondc

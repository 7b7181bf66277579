#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace nondc {

using BoolMask = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;
using ResponseVector = Eigen::VectorXd;

// A numeric matrix paired with an observation mask (true = observed).
// The stored values are canonicalized on construction: every masked-out
// cell is set to 0, so column inner products over the observed overlap
// reduce to plain dot products and sentinel content can never leak into
// any downstream computation.
class ObservedMatrix {
 public:
  ObservedMatrix(Eigen::MatrixXd values, BoolMask mask);
  static ObservedMatrix fully_observed(Eigen::MatrixXd values);

  const Eigen::MatrixXd& values() const { return values_; }
  const BoolMask& mask() const { return mask_; }
  Eigen::Index rows() const { return values_.rows(); }
  Eigen::Index cols() const { return values_.cols(); }
  bool complete() const { return mask_.all(); }

 private:
  Eigen::MatrixXd values_;
  BoolMask mask_;
};

// Per-column affine transform fitted on observed entries only, plus the
// response mean used for centering.
struct Standardization {
  Eigen::VectorXd col_means;
  Eigen::VectorXd col_scales;  // sample standard deviations, all > 0
  double y_mean = 0.0;
};

struct StandardizedData {
  ObservedMatrix x;
  ResponseVector y;  // centered
  Standardization transform;
};

// Center/scale every column to observed-entry mean 0, sd 1; center y.
// Throws DegenerateColumnError when a column has fewer than two observed
// entries or zero observed variance.
StandardizedData standardize(const ObservedMatrix& x, const ResponseVector& y);

// Apply an existing transform (e.g. a training fold's) to new data.
ObservedMatrix apply_standardization(const ObservedMatrix& x, const Standardization& s);

// Inverse transform on observed entries.
ObservedMatrix unstandardize(const ObservedMatrix& x_std, const Standardization& s);

// Map standardized-coordinate coefficients back to the raw scale:
// y ≈ intercept + x·beta.
struct RawCoefficients {
  Eigen::VectorXd beta;
  double intercept = 0.0;
};
RawCoefficients to_raw_coefficients(const Standardization& s, const Eigen::VectorXd& beta_std);

struct CsvData {
  ObservedMatrix x;
  ResponseVector y;  // empty when no response column was requested
  std::vector<std::string> feature_names;
  std::string response_name;
};

// Read a comma-separated file with one header row. Cells equal to
// na_token (after trimming) become unobserved. response_column may be
// empty, in which case all columns are features and y stays empty.
CsvData read_csv(const std::string& path, const std::string& na_token,
                 const std::string& response_column);

}  // namespace nondc

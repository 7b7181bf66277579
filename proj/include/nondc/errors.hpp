#pragma once

#include <stdexcept>
#include <string>

namespace nondc {

// Base for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad data or bad arguments: unreadable files, dimension mismatches,
// malformed cells. CLI maps these to exit code 1.
class InputError : public Error {
 public:
  using Error::Error;
};

// A requested configuration that cannot be solved (non-convex objective,
// empty feasible grid). CLI maps these to exit code 2.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(std::string msg, long row, long col)
      : InputError(std::move(msg)), row(row), col(col) {}
  long row;  // 1-based file line
  long col;  // 1-based column
};

class DegenerateColumnError : public InputError {
 public:
  DegenerateColumnError(std::string msg, long column)
      : InputError(std::move(msg)), column(column) {}
  long column;  // 0-based
};

// Pairwise overlap count N_jk is zero while eta < 1; the unbiased
// covariance entry is undefined there.
class ZeroOverlapError : public InputError {
 public:
  ZeroOverlapError(std::string msg, long j, long k)
      : InputError(std::move(msg)), j(j), k(k) {}
  long j, k;  // 0-based column pair
};

class SchemaError : public InputError {
 public:
  using InputError::InputError;
};

class FoldDegeneracyError : public InputError {
 public:
  FoldDegeneracyError(std::string msg, long column)
      : InputError(std::move(msg)), column(column) {}
  long column;
};

class NonConvexError : public InfeasibleError {
 public:
  NonConvexError(std::string msg, double lambda_min, double min_ridge)
      : InfeasibleError(std::move(msg)), lambda_min(lambda_min), min_ridge(min_ridge) {}
  double lambda_min;  // smallest eigenvalue of c_zz
  double min_ridge;   // minimal feasible lambda*(1-alpha)
};

class EmptyGridError : public InfeasibleError {
 public:
  using InfeasibleError::InfeasibleError;
};

// Coordinate descent produced non-finite values (only reachable with
// enforce_convexity off).
class DivergenceError : public Error {
 public:
  using Error::Error;
};

// A caller violated an internal contract (e.g. asymmetric matrix passed
// to the symmetric eigensolver).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace nondc

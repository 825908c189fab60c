#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polyft {

// Points and vectors of the primal space. Dimension is dynamic so that
// verification routines work for any d >= 2; the full pipeline uses d in {2,3}.
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Tolerances used across the library.
//   eps       algebraic identities (functional levels, norm equalities)
//   hausdorff comparison of two polytopes computed by different routes
//   oracle    grid / brute-force refutations
struct Tolerance {
  double eps = 1e-9;
  double hausdorff = 1e-6;
  double oracle = 1e-4;
};

enum class ErrorCode {
  InvalidInput,
  NotCentrallySymmetric,
  OriginNotInterior,
  DegenerateDimension,
  ZeroVector,
  LPFailure,
  CoincidentSite,
  NotNorming,
  EmptyIntersection,
  UnboundedIntersection,
  NotCollinear,
  BudgetExceeded,
  WrongDimension,
  UnknownBall,
  NotSymmetric,
  CaseFailed,
  ConfirmationFailed,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Numerical failures map to a different CLI exit status than bad input.
bool is_numerical_failure(ErrorCode code);

inline double scaled_tol(double eps, double scale) { return eps * std::max(1.0, scale); }

bool all_finite(const Vector& v);

}  // namespace polyft

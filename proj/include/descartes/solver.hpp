#pragma once

#include <span>

namespace descartes {

struct CentralCurvature {
  double kappa = 0.0;          // from the geometric angle-sum oracle
  double polished = 0.0;       // root of the theorem residual near kappa
  double residual = 0.0;       // theorem residual (subset form) at kappa
  double relative_residual = 0.0;
  double agreement = 0.0;      // |kappa - polished| / kappa
};

/// Central curvature of the flower with the given petal curvatures.
///
/// The geometric solver fixes the root; the theorem residual must vanish
/// there (relative to tol), and a root search on the theorem residual alone,
/// bracketed to +-10% around the geometric root, must land on the same value
/// within tol. Either failure throws NumericError.
CentralCurvature solve_central_curvature(std::span<const double> petal_curvatures,
                                         double tol);

/// Relative theorem residual of the flower with the given petal curvatures
/// and a candidate central curvature.
double theorem_relative_residual(std::span<const double> petal_curvatures,
                                 double central_curvature);

}  // namespace descartes

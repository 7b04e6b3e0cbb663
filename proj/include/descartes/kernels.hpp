#pragma once

// Data-parallel kernels. Each has a serial reference that tests compare the
// OpenMP version against; bench/ times the pair.

#include <cstddef>
#include <span>
#include <vector>

namespace descartes {

/// sum over K of {1..n-1} with n-1-|K| = 2l+1 of (-1)^l prod_{k in K} m_k, by
/// direct enumeration of all 2^(n-1) subsets. The m_0^2 factor of odd n is
/// not applied. Throws CapacityError for n - 1 > 40.
double subset_sum_serial(std::span<const double> m);
double subset_sum_parallel(std::span<const double> m);

/// Everything the batch checker measures for one petal set.
struct FlowerCheck {
  double kappa = 0.0;                 // geometric central curvature
  double relative_residual = 0.0;     // theorem, at kappa
  double perturbed_residual = 0.0;    // min |theorem residual| at kappa*(1 +- 1%)
  double inversion_error = 0.0;       // max |(inverted - original) - 2|
  // Chain quantities use the theorem-polished root rather than kappa.
  double closure_bracket = 0.0;       // |{alpha_0, alpha_n-1} + 1|
  double flat_residual = 0.0;         // |flat-flower residual| of flattened chain
  double parallelogram_error = 0.0;   // max |Im(z_j-1 conj z_j) - 1|, j = 1..n-1
  double closing_area = 0.0;          // Im(z_0 conj z_n-1)
};

FlowerCheck check_flower(std::span<const double> petal_curvatures);

std::vector<FlowerCheck> check_flowers_serial(
    std::span<const std::vector<double>> petal_sets);
std::vector<FlowerCheck> check_flowers_parallel(
    std::span<const std::vector<double>> petal_sets);

}  // namespace descartes

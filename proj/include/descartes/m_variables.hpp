#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "descartes/euclid_flower.hpp"

namespace descartes {

/// The auxiliary variables m_0 .. m_{n-1}. Entries are finite and >= 0.
class MVector {
 public:
  explicit MVector(std::vector<double> values);

  std::size_t size() const noexcept { return m_.size(); }
  double operator[](std::size_t j) const noexcept { return m_[j]; }
  std::span<const double> values() const noexcept { return m_; }

 private:
  std::vector<double> m_;
};

/// kappa_j / kappa_inf for each petal.
std::vector<double> normalize_curvatures(const FlowerSpec& spec);

/// m_0 = sqrt(k_0 + 1), m_j = sqrt((k_j + 1)(k_{j-1} + 1) - 1) for curvatures
/// already normalized to a unit central circle.
MVector m_from_normalized(std::span<const double> normalized_curvatures);

/// kappa_j + 1 expressed through the m-variables: alternating products of
/// (m_k^2 + 1) with a factor m_0^{+-2}. Defined for 0 < j < n; j == 0 is
/// accepted too and returns m_0^2.
double g_product(const MVector& m, std::size_t j);

/// The two sides of the generalized Descartes equation. For odd n the left
/// side carries the m_0^2 factor.
struct TheoremSides {
  double lhs = 0.0;
  double rhs = 0.0;

  double residual() const noexcept { return lhs - rhs; }
  /// |lhs - rhs| / max(|lhs|, |rhs|, 1). rhs is a product of (m^2 + 1) terms,
  /// so the denominator never falls below 1.
  double relative_residual() const noexcept;
};

/// Complex-product form: (i/2)(prod(m_j - i) - prod(m_j + i)) [times m_0^2
/// for odd n] minus the alternating product of (m^2 + 1). Throws NumericError
/// if the imaginary part survives beyond rounding.
TheoremSides theorem_sides_complex(const MVector& m);
double theorem_residual_complex(const MVector& m);

/// Subset-sum form: sum over K of [n-1] with n-1-|K| = 2l+1 of
/// (-1)^l prod_{k in K} m_k, evaluated in real arithmetic through the
/// elementary symmetric polynomials of m_1 .. m_{n-1}.
TheoremSides theorem_sides_subset(const MVector& m);
double theorem_residual_subset(const MVector& m);

/// Right-hand side only; shared by both forms.
double theorem_rhs(const MVector& m);

}  // namespace descartes

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "descartes/hyperbolic.hpp"
#include "descartes/m_variables.hpp"

namespace descartes {

/// Spinors alpha_0 .. alpha_{n-1} of a flat flower: xi_0 = 0, eta_0 > 0 and
/// {alpha_j, alpha_j+1} = -1 for consecutive pairs. The closing condition
/// {alpha_0, alpha_n-1} = -1 is not an invariant; it holds exactly when the
/// chain comes from a genuine flower (see closure_residuals).
class SpinorChain {
 public:
  /// Throws NumericError if the invariants fail by more than tol.
  explicit SpinorChain(std::vector<Spinor> spinors, double tol = 1e-9);

  std::size_t size() const noexcept { return spinors_.size(); }
  const Spinor& operator[](std::size_t j) const noexcept { return spinors_[j]; }
  std::span<const Spinor> spinors() const noexcept { return spinors_; }

  std::vector<double> xis() const;
  std::vector<double> etas() const;
  /// z_j = xi_j + i eta_j.
  std::complex<double> z(std::size_t j) const noexcept;
  /// Flat-flower curvatures 2 eta_j^2.
  std::vector<double> flat_curvatures() const;

 private:
  std::vector<Spinor> spinors_;
};

/// Spinor coordinates from the m-variables, always taking the + branch:
///   eta_{j+1} = (-xi_j + eta_j m_{j+1}) / (xi_j^2 + eta_j^2)
///   xi_{j+1}  = (eta_{j+1} / eta_j) xi_j + 1 / eta_j
/// starting from (0, m_0). The denominator is the disc curvature minus one of
/// alpha_j, which equals g_product(m, j) in exact arithmetic.
///
/// The + branch can still produce negative eta (the chain then wraps past
/// infinity); signs are kept as computed. Runs in extended precision.
/// Throws NumericError when some eta_j is zero.
SpinorChain spinor_recursion(const MVector& m);

/// eta_j from the alternating (m_k +- i) product closed form.
double eta_closed_form(const MVector& m, std::size_t j);

/// xi_j = 1/eta_{j-1} + eta_j sum_{k=1}^{j-1} 1/(eta_{k-1} eta_k), j >= 1.
double xi_from_etas(std::span<const double> etas, std::size_t j);

struct ClosureResiduals {
  double bracket = 0.0;   // {alpha_0, alpha_n-1} + 1
  double eta_sum = 0.0;   // sum 1/(eta_j eta_j+1) - 1/(eta_0 eta_n-1)
};

ClosureResiduals closure_residuals(const SpinorChain& chain);

/// sum_{j=0}^{n-2} 1/sqrt(k_j k_{j+1}) - 1/sqrt(k_0 k_{n-1}) for flat-flower
/// curvatures. Homogeneous of degree -1.
double flat_flower_residual(std::span<const double> flat_curvatures);

/// Moves a closed chain to its flat-flower position: a disc rotation puts
/// infinity in the gap between the last and first horocycle, the overall
/// sign is fixed so every eta is positive, and a horizontal translation puts
/// alpha_0 back at tangency 0. Brackets are preserved throughout.
SpinorChain flatten_chain(const SpinorChain& chain);

/// Im(z_{j-1} conj z_j) for j = 1..n-1 followed by Im(z_0 conj z_{n-1}).
std::vector<double> parallelogram_areas(const SpinorChain& chain);
/// Re(z_{j-1} conj z_j) for j = 1..n-1.
std::vector<double> consecutive_real_parts(const SpinorChain& chain);

}  // namespace descartes

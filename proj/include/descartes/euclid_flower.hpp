#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace descartes {

/// Euclidean circle given by centre and radius.
class Circle {
 public:
  /// Throws DomainError unless r > 0 and all fields are finite.
  Circle(double cx, double cy, double r);

  double cx() const noexcept { return cx_; }
  double cy() const noexcept { return cy_; }
  double r() const noexcept { return r_; }
  double curvature() const noexcept { return 1.0 / r_; }

  double center_distance(const Circle& other) const noexcept;

  friend bool operator==(const Circle&, const Circle&) = default;

 private:
  double cx_;
  double cy_;
  double r_;
};

/// Petal curvatures of an n-flower, optionally with the central curvature.
struct FlowerSpec {
  std::vector<double> petal_curvatures;
  std::optional<double> central_curvature;

  std::size_t size() const noexcept { return petal_curvatures.size(); }

  /// n >= 3, all petals > 0, central (if present) > 0. Throws DomainError.
  void validate() const;
};

/// A central circle with n petals laid out anticlockwise around it.
/// gap_angles[j] is the angle at the central centre between petal j and
/// petal j+1 (mod n).
struct FlowerLayout {
  Circle central;
  std::vector<Circle> petals;
  std::vector<double> gap_angles;

  std::size_t size() const noexcept { return petals.size(); }
};

/// Tangency residuals of a layout. Only adjacent tangencies are checked;
/// overlap between non-adjacent petals is not a flower condition.
struct FlowerValidation {
  std::vector<double> central_residuals;   // |d(C, P_j) - (R + r_j)|
  std::vector<double> neighbor_residuals;  // |d(P_j, P_j+1) - (r_j + r_j+1)|
  double angle_sum_residual = 0.0;         // |sum(gap_angles) - 2 pi|

  double max_residual() const noexcept;
  bool passed(double tol) const noexcept { return max_residual() <= tol; }
};

inline constexpr double kDefaultTangencyTolerance = 1e-9;

/// Central angle between the centres of two petals of radii r_a, r_b that
/// touch each other and a central circle of radius R. Result in (0, pi).
double angle_gap(double R, double r_a, double r_b);

/// Sum of angle_gap over consecutive petal pairs (cyclic). Strictly
/// decreasing in R, from n*pi at R -> 0+ down to 0 as R -> infinity.
double angle_sum(double R, std::span<const double> petal_radii);

/// Central radius closing the flower: angle_sum(R) == 2 pi. Bisection on the
/// monotone angle sum, run to floating-point exhaustion; throws NumericError
/// if the achieved angle-sum residual exceeds tol.
double solve_central_radius(std::span<const double> petal_radii, double tol);

/// Central circle at the origin, petal 0 on the positive x-axis, the rest
/// placed anticlockwise at their cumulative gap angles.
FlowerLayout layout_flower(std::span<const double> petal_radii, double tol);

FlowerValidation validate_flower(const FlowerLayout& layout);

/// Translate and scale so the central circle becomes the unit circle at the
/// origin.
FlowerLayout normalize_layout(const FlowerLayout& layout);

/// Inversion in the unit circle. Throws DomainError for circles through the
/// origin, whose image is a line.
Circle invert_in_unit_circle(const Circle& c);

/// Inverts every petal of a unit-normalized layout. The images are the
/// horocycles of the disc model: each is internally tangent to the unit
/// circle, has curvature kappa_j + 2, and touches its neighbours. Those
/// postconditions are checked against tol (NumericError on failure).
std::vector<Circle> inverted_flower(const FlowerLayout& unit_layout,
                                    double tol = kDefaultTangencyTolerance);

// Classical curvature relations. The *_scale companions return the largest
// term magnitude, for residuals that need to be judged relatively.

double classic_descartes_residual(double k_inf, double k1, double k2, double k3);
double classic_descartes_scale(double k_inf, double k1, double k2, double k3);

double four_flower_poly_residual(double k_inf, double k1, double k2, double k3,
                                 double k4);
double four_flower_poly_scale(double k_inf, double k1, double k2, double k3,
                              double k4);

}  // namespace descartes

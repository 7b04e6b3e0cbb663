#pragma once

#include <complex>

namespace descartes {

/// Real spinor (xi, eta) != (0, 0). Corresponds to a horocycle in the upper
/// half-plane with a planar spin decoration; (-xi, -eta) is the other spin
/// lift of the same horocycle.
class Spinor {
 public:
  Spinor(double xi, double eta);

  double xi() const noexcept { return xi_; }
  double eta() const noexcept { return eta_; }

  Spinor operator-() const { return {-xi_, -eta_}; }
  friend bool operator==(const Spinor&, const Spinor&) = default;

 private:
  double xi_;
  double eta_;
};

/// A point of the Riemann sphere: a complex value or infinity.
class ExtComplex {
 public:
  ExtComplex(std::complex<double> z) : z_(z) {}  // NOLINT: implicit by intent
  ExtComplex(double x) : z_(x, 0.0) {}           // NOLINT
  static ExtComplex infinity() noexcept;

  bool is_infinity() const noexcept { return infinite_; }
  /// Throws DomainError at infinity.
  std::complex<double> value() const;

 private:
  ExtComplex() = default;
  std::complex<double> z_{};
  bool infinite_ = false;
};

/// Horocycle of the upper half-plane. A finite tangency point carries a
/// Euclidean radius; tangency at infinity carries the height of the
/// horizontal line.
class Horocycle {
 public:
  static Horocycle at(double tangency, double radius);
  static Horocycle at_infinity(double height);

  bool is_at_infinity() const noexcept { return at_infinity_; }
  /// The following accessors throw DomainError when called on the wrong kind.
  double tangency() const;
  double radius() const;
  double height() const;
  double curvature() const { return 1.0 / radius(); }

 private:
  Horocycle(bool at_infinity, double tangency, double size)
      : at_infinity_(at_infinity), tangency_(tangency), size_(size) {}
  bool at_infinity_;
  double tangency_;
  double size_;
};

/// Horocycle of the Poincare disc, tangent to the unit circle at
/// exp(i * tangency_angle), Euclidean radius in (0, 1).
class DiscHorocycle {
 public:
  DiscHorocycle(double tangency_angle, double radius);

  double tangency_angle() const noexcept { return angle_; }
  double radius() const noexcept { return radius_; }
  double curvature() const noexcept { return 1.0 / radius_; }
  std::complex<double> center() const;

 private:
  double angle_;
  double radius_;
};

/// Element of SL(2, R) acting on spinors by matrix-vector product and on the
/// upper half-plane by z -> (a z + b) / (c z + d).
struct Unimodular {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  double det() const noexcept { return a * d - b * c; }
  /// Rotation by 2*theta about i in the upper half-plane (about 0 in the disc).
  static Unimodular rotation(double theta);
  static Unimodular translation(double shift) { return {1.0, shift, 0.0, 1.0}; }
};

/// {a, b} = xi_a eta_b - eta_a xi_b. Antisymmetric; its absolute value is the
/// lambda length between the corresponding horocycles.
double bracket(const Spinor& a, const Spinor& b) noexcept;

/// Tangency xi/eta, radius 1/(2 eta^2); eta == 0 gives the horizontal line at
/// height xi^2.
Horocycle spinor_to_horocycle(const Spinor& s);

/// The eta > 0 spinor of a horocycle with finite tangency point.
Spinor horocycle_to_spinor(const Horocycle& h);

/// S(z) = (z - i) / (z + i), upper half-plane to disc; infinity maps to 1.
ExtComplex cayley_uhp_to_disc(const ExtComplex& z);
/// S^-1(z) = (z + 1) i / (1 - z); 1 maps to infinity.
ExtComplex cayley_disc_to_uhp(const ExtComplex& z);

/// Image of a disc horocycle under S^-1, by mapping three of its points and
/// refitting. Tangency at angle 0 (image at infinity) is rejected.
Horocycle disc_horocycle_to_uhp(const DiscHorocycle& h);
/// Image of an upper half-plane horocycle under S, same three-point approach.
DiscHorocycle uhp_horocycle_to_disc(const Horocycle& h);

/// Disc-model curvature xi^2 + eta^2 + 1 of the horocycle of s (eta != 0).
double disc_curvature_of_spinor(const Spinor& s);

/// Rotation by pi about i (equivalently about the disc centre):
/// (xi, eta) -> (-eta, xi).
Spinor rotate_spinor(const Spinor& s) noexcept;

/// |p - q| sqrt(k1 k2) / 2 for finite, distinct tangency points p, q.
double lambda_length_geometric(const Horocycle& h1, const Horocycle& h2);

/// Throws DomainError unless |det M - 1| < 1e-12.
Spinor apply_unimodular(const Unimodular& m, const Spinor& s);

/// Image of a horocycle under the Mobius action of m, by three-point refit.
Horocycle mobius_image(const Unimodular& m, const Horocycle& h);

}  // namespace descartes

#include "descartes/hyperbolic.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "descartes/errors.hpp"

namespace descartes {

namespace {

using cplx = std::complex<double>;
using wide_cplx = std::complex<long double>;

struct FittedCircle {
  cplx center;
  double radius;
};

// Circumcircle of three points.
FittedCircle circle_through(wide_cplx a, wide_cplx b, wide_cplx c) {
  const wide_cplx ab = b - a;
  const wide_cplx ac = c - a;
  const long double cross = ab.real() * ac.imag() - ab.imag() * ac.real();
  if (std::abs(cross) < 1e-300L) {
    throw NumericError("circle fit through collinear points");
  }
  const long double nab = std::norm(ab);
  const long double nac = std::norm(ac);
  const wide_cplx offset((ac.imag() * nab - ab.imag() * nac) / (2.0L * cross),
                         (ab.real() * nac - ac.real() * nab) / (2.0L * cross));
  const wide_cplx center = a + offset;
  return {cplx(static_cast<double>(center.real()), static_cast<double>(center.imag())),
          static_cast<double>(std::abs(offset))};
}

// Three well-separated points of a finite upper half-plane horocycle, all
// away from its tangency point on the real axis.
std::array<cplx, 3> sample_points(const Horocycle& h) {
  if (h.is_at_infinity()) {
    const double y = h.height();
    return {cplx(-1.0, y), cplx(0.0, y), cplx(1.0, y)};
  }
  const double p = h.tangency();
  const double r = h.radius();
  return {cplx(p - r, r), cplx(p, 2.0 * r), cplx(p + r, r)};
}

}  // namespace

Spinor::Spinor(double xi, double eta) : xi_(xi), eta_(eta) {
  if (!std::isfinite(xi) || !std::isfinite(eta)) {
    throw DomainError("spinor components must be finite");
  }
  if (xi == 0.0 && eta == 0.0) throw DomainError("spinor must be nonzero");
}

ExtComplex ExtComplex::infinity() noexcept {
  ExtComplex z;
  z.infinite_ = true;
  return z;
}

std::complex<double> ExtComplex::value() const {
  if (infinite_) throw DomainError("point at infinity has no finite value");
  return z_;
}

Horocycle Horocycle::at(double tangency, double radius) {
  if (!std::isfinite(tangency)) throw DomainError("tangency point must be finite");
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw DomainError("horocycle radius must be positive and finite");
  }
  return Horocycle(false, tangency, radius);
}

Horocycle Horocycle::at_infinity(double height) {
  if (!(height > 0.0) || !std::isfinite(height)) {
    throw DomainError("horocycle height must be positive and finite");
  }
  return Horocycle(true, 0.0, height);
}

double Horocycle::tangency() const {
  if (at_infinity_) throw DomainError("horocycle is tangent at infinity");
  return tangency_;
}

double Horocycle::radius() const {
  if (at_infinity_) throw DomainError("horocycle at infinity has no radius");
  return size_;
}

double Horocycle::height() const {
  if (!at_infinity_) throw DomainError("finite horocycle has no height");
  return size_;
}

DiscHorocycle::DiscHorocycle(double tangency_angle, double radius)
    : angle_(tangency_angle), radius_(radius) {
  if (!std::isfinite(tangency_angle)) throw DomainError("angle must be finite");
  if (!(radius > 0.0 && radius < 1.0)) {
    throw DomainError("disc horocycle radius must lie in (0, 1)");
  }
}

std::complex<double> DiscHorocycle::center() const {
  return std::polar(1.0 - radius_, angle_);
}

Unimodular Unimodular::rotation(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c, -s, s, c};
}

double bracket(const Spinor& a, const Spinor& b) noexcept {
  return a.xi() * b.eta() - a.eta() * b.xi();
}

Horocycle spinor_to_horocycle(const Spinor& s) {
  if (s.eta() == 0.0) return Horocycle::at_infinity(s.xi() * s.xi());
  return Horocycle::at(s.xi() / s.eta(), 1.0 / (2.0 * s.eta() * s.eta()));
}

Spinor horocycle_to_spinor(const Horocycle& h) {
  if (h.is_at_infinity()) {
    throw DomainError("horocycle at infinity: use a (xi, 0) spinor directly");
  }
  const double eta = 1.0 / std::sqrt(2.0 * h.radius());
  return Spinor(h.tangency() * eta, eta);
}

ExtComplex cayley_uhp_to_disc(const ExtComplex& z) {
  if (z.is_infinity()) return ExtComplex(1.0);
  const cplx w = z.value();
  const cplx i(0.0, 1.0);
  if (w == -i) return ExtComplex::infinity();
  return ExtComplex((w - i) / (w + i));
}

ExtComplex cayley_disc_to_uhp(const ExtComplex& z) {
  if (z.is_infinity()) return ExtComplex(cplx(0.0, -1.0));
  const cplx w = z.value();
  if (w == cplx(1.0, 0.0)) return ExtComplex::infinity();
  return ExtComplex((w + 1.0) * cplx(0.0, 1.0) / (1.0 - w));
}

Horocycle disc_horocycle_to_uhp(const DiscHorocycle& h) {
  const double theta = std::remainder(h.tangency_angle(), 2.0 * std::numbers::pi);
  if (std::abs(theta) < 1e-12) {
    throw DomainError("disc horocycle tangent at 1 maps to a horocycle at infinity");
  }
  const cplx c = h.center();
  const cplx dir = std::polar(1.0, h.tangency_angle());
  const double r = h.radius();
  // Innermost point and the two points a quarter turn either side of it.
  const cplx a = cayley_disc_to_uhp(c - r * dir).value();
  const cplx b = cayley_disc_to_uhp(c + r * dir * cplx(0.0, 1.0)).value();
  const cplx d = cayley_disc_to_uhp(c - r * dir * cplx(0.0, 1.0)).value();
  const FittedCircle fit = circle_through(a, b, d);
  return Horocycle::at(fit.center.real(), fit.radius);
}

DiscHorocycle uhp_horocycle_to_disc(const Horocycle& h) {
  const auto pts = sample_points(h);
  const FittedCircle fit =
      circle_through(cayley_uhp_to_disc(pts[0]).value(),
                     cayley_uhp_to_disc(pts[1]).value(),
                     cayley_uhp_to_disc(pts[2]).value());
  return DiscHorocycle(std::arg(fit.center), fit.radius);
}

double disc_curvature_of_spinor(const Spinor& s) {
  if (s.eta() == 0.0) {
    throw DomainError("eta = 0: horocycle is centred at the disc point 1");
  }
  return s.xi() * s.xi() + s.eta() * s.eta() + 1.0;
}

Spinor rotate_spinor(const Spinor& s) noexcept { return Spinor(-s.eta(), s.xi()); }

double lambda_length_geometric(const Horocycle& h1, const Horocycle& h2) {
  if (h1.is_at_infinity() || h2.is_at_infinity()) {
    throw DomainError("lambda_length_geometric needs finite tangency points");
  }
  const double gap = std::abs(h1.tangency() - h2.tangency());
  if (gap == 0.0) throw DomainError("horocycles share a tangency point");
  return gap * std::sqrt(h1.curvature() * h2.curvature()) / 2.0;
}

Spinor apply_unimodular(const Unimodular& m, const Spinor& s) {
  if (!(std::abs(m.det() - 1.0) < 1e-12)) {
    throw DomainError("matrix is not unimodular");
  }
  return Spinor(m.a * s.xi() + m.b * s.eta(), m.c * s.xi() + m.d * s.eta());
}

Horocycle mobius_image(const Unimodular& m, const Horocycle& h) {
  if (!(std::abs(m.det() - 1.0) < 1e-12)) {
    throw DomainError("matrix is not unimodular");
  }
  const auto act = [&m](cplx z) {
    const wide_cplx w(z.real(), z.imag());
    const long double a = m.a, b = m.b, c = m.c, d = m.d;
    return (a * w + b) / (c * w + d);
  };
  const auto pts = sample_points(h);

  // The image is a horizontal line exactly when the pole -d/c is the
  // tangency point (or c = 0 for a horocycle already at infinity).
  const bool to_infinity =
      h.is_at_infinity()
          ? m.c == 0.0
          : m.c != 0.0 && std::abs(m.c * h.tangency() + m.d) <=
                              1e-14 * (std::abs(m.c * h.tangency()) + std::abs(m.d));
  if (to_infinity) return Horocycle::at_infinity(static_cast<double>(act(pts[1]).imag()));

  const FittedCircle fit = circle_through(act(pts[0]), act(pts[1]), act(pts[2]));
  return Horocycle::at(fit.center.real(), fit.radius);
}

}  // namespace descartes

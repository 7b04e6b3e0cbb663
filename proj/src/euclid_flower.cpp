#include "descartes/euclid_flower.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "descartes/errors.hpp"

namespace descartes {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxBracketDoublings = 1000;
constexpr int kMaxBisections = 4000;

void require_radii(std::span<const double> radii) {
  if (radii.size() < 3) {
    throw DomainError("a flower needs at least 3 petals, got " +
                      std::to_string(radii.size()));
  }
  for (double r : radii) {
    if (!(r > 0.0) || !std::isfinite(r)) {
      throw DomainError("petal radii must be positive and finite");
    }
  }
}

}  // namespace

Circle::Circle(double cx, double cy, double r) : cx_(cx), cy_(cy), r_(r) {
  if (!std::isfinite(cx) || !std::isfinite(cy)) {
    throw DomainError("circle centre must be finite");
  }
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw DomainError("circle radius must be positive and finite");
  }
}

double Circle::center_distance(const Circle& other) const noexcept {
  return std::hypot(cx_ - other.cx_, cy_ - other.cy_);
}

void FlowerSpec::validate() const {
  if (petal_curvatures.size() < 3) {
    throw DomainError("a flower needs at least 3 petals");
  }
  for (double k : petal_curvatures) {
    if (!(k > 0.0) || !std::isfinite(k)) {
      throw DomainError("petal curvatures must be positive and finite");
    }
  }
  if (central_curvature && (!(*central_curvature > 0.0) ||
                            !std::isfinite(*central_curvature))) {
    throw DomainError("central curvature must be positive and finite");
  }
}

double FlowerValidation::max_residual() const noexcept {
  double worst = angle_sum_residual;
  for (double v : central_residuals) worst = std::max(worst, v);
  for (double v : neighbor_residuals) worst = std::max(worst, v);
  return worst;
}

double angle_gap(double R, double r_a, double r_b) {
  if (!(R > 0.0) || !(r_a > 0.0) || !(r_b > 0.0)) {
    throw DomainError("angle_gap requires positive radii");
  }
  // Half-angle form of the law of cosines for sides R+r_a, R+r_b, r_a+r_b.
  return 2.0 * std::atan(std::sqrt(r_a * r_b / (R * (R + r_a + r_b))));
}

double angle_sum(double R, std::span<const double> petal_radii) {
  const std::size_t n = petal_radii.size();
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    sum += angle_gap(R, petal_radii[j], petal_radii[(j + 1) % n]);
  }
  return sum;
}

double solve_central_radius(std::span<const double> petal_radii, double tol) {
  require_radii(petal_radii);
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");

  double lo = *std::min_element(petal_radii.begin(), petal_radii.end()) * 1e-6;
  double hi = std::accumulate(petal_radii.begin(), petal_radii.end(), 0.0) * 1e6;

  // angle_sum is decreasing: need sum(lo) > 2 pi > sum(hi).
  int doublings = 0;
  while (!(angle_sum(lo, petal_radii) > kTwoPi)) {
    lo *= 0.5;
    if (++doublings > kMaxBracketDoublings || lo == 0.0) {
      throw NumericError("central radius bracket expansion failed (low end)");
    }
  }
  while (!(angle_sum(hi, petal_radii) < kTwoPi)) {
    hi *= 2.0;
    if (++doublings > kMaxBracketDoublings || !std::isfinite(hi)) {
      throw NumericError("central radius bracket expansion failed (high end)");
    }
  }

  for (int it = 0; it < kMaxBisections; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (angle_sum(mid, petal_radii) > kTwoPi) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  // Return whichever end of the final bracket closes the flower better.
  const double err_lo = std::abs(angle_sum(lo, petal_radii) - kTwoPi);
  const double err_hi = std::abs(angle_sum(hi, petal_radii) - kTwoPi);
  const double R = err_lo < err_hi ? lo : hi;
  const double err = std::min(err_lo, err_hi);
  if (!(err <= tol)) {
    throw NumericError("angle sum misses 2 pi by " + std::to_string(err));
  }
  return R;
}

FlowerLayout layout_flower(std::span<const double> petal_radii, double tol) {
  const double R = solve_central_radius(petal_radii, tol);
  const std::size_t n = petal_radii.size();

  std::vector<double> gaps(n);
  for (std::size_t j = 0; j < n; ++j) {
    gaps[j] = angle_gap(R, petal_radii[j], petal_radii[(j + 1) % n]);
  }

  std::vector<Circle> petals;
  petals.reserve(n);
  double angle = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double dist = R + petal_radii[j];
    petals.emplace_back(dist * std::cos(angle), dist * std::sin(angle),
                        petal_radii[j]);
    angle += gaps[j];
  }
  return FlowerLayout{Circle(0.0, 0.0, R), std::move(petals), std::move(gaps)};
}

FlowerValidation validate_flower(const FlowerLayout& layout) {
  const std::size_t n = layout.size();
  FlowerValidation v;
  v.central_residuals.reserve(n);
  v.neighbor_residuals.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Circle& p = layout.petals[j];
    const Circle& q = layout.petals[(j + 1) % n];
    v.central_residuals.push_back(
        std::abs(layout.central.center_distance(p) - (layout.central.r() + p.r())));
    v.neighbor_residuals.push_back(std::abs(p.center_distance(q) - (p.r() + q.r())));
  }
  const double total =
      std::accumulate(layout.gap_angles.begin(), layout.gap_angles.end(), 0.0);
  v.angle_sum_residual = std::abs(total - kTwoPi);
  return v;
}

FlowerLayout normalize_layout(const FlowerLayout& layout) {
  const double s = 1.0 / layout.central.r();
  const double ox = layout.central.cx();
  const double oy = layout.central.cy();
  std::vector<Circle> petals;
  petals.reserve(layout.size());
  for (const Circle& p : layout.petals) {
    petals.emplace_back((p.cx() - ox) * s, (p.cy() - oy) * s, p.r() * s);
  }
  return FlowerLayout{Circle(0.0, 0.0, 1.0), std::move(petals), layout.gap_angles};
}

Circle invert_in_unit_circle(const Circle& c) {
  const double power = c.cx() * c.cx() + c.cy() * c.cy() - c.r() * c.r();
  if (std::abs(power) <= 1e-300 ||
      std::abs(power) <= 4.0 * std::numeric_limits<double>::epsilon() * c.r() * c.r()) {
    throw DomainError("circle passes through the centre of inversion");
  }
  return Circle(c.cx() / power, c.cy() / power, c.r() / std::abs(power));
}

std::vector<Circle> inverted_flower(const FlowerLayout& unit_layout, double tol) {
  const Circle& central = unit_layout.central;
  if (central.cx() != 0.0 || central.cy() != 0.0 ||
      std::abs(central.r() - 1.0) > 1e-15) {
    throw DomainError("inverted_flower expects the unit circle at the origin");
  }
  const std::size_t n = unit_layout.size();
  std::vector<Circle> images;
  images.reserve(n);
  for (const Circle& p : unit_layout.petals) {
    const Circle img = invert_in_unit_circle(p);
    const double internal = std::abs(std::hypot(img.cx(), img.cy()) - (1.0 - img.r()));
    const double shift = (img.curvature() - p.curvature()) - 2.0;
    if (internal > tol || std::abs(shift) > tol * std::max(1.0, img.curvature())) {
      throw NumericError("inverted petal is not an inscribed circle of curvature k + 2");
    }
    images.push_back(img);
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Circle& a = images[j];
    const Circle& b = images[(j + 1) % n];
    if (std::abs(a.center_distance(b) - (a.r() + b.r())) > tol) {
      throw NumericError("consecutive inverted petals are not tangent");
    }
  }
  return images;
}

double classic_descartes_residual(double k_inf, double k1, double k2, double k3) {
  const double sum = k_inf + k1 + k2 + k3;
  return sum * sum - 2.0 * (k_inf * k_inf + k1 * k1 + k2 * k2 + k3 * k3);
}

double classic_descartes_scale(double k_inf, double k1, double k2, double k3) {
  const double sum = k_inf + k1 + k2 + k3;
  return std::max(sum * sum, 2.0 * (k_inf * k_inf + k1 * k1 + k2 * k2 + k3 * k3));
}

namespace {

struct QuarticTerms {
  double quartic, quadratic, cross, linear, product, mixed;
};

QuarticTerms quartic_terms(double k, double k1, double k2, double k3, double k4) {
  QuarticTerms t{};
  t.quartic = 16.0 * k * k * k * k;
  t.quadratic = -8.0 * k * k *
                (k1 * k2 + k2 * k3 + k3 * k4 + k4 * k1 + 2.0 * k1 * k3 + 2.0 * k2 * k4);
  t.cross = (k1 * k1 + k3 * k3) * (k2 * k2 + k4 * k4);
  t.linear = -16.0 * k * (k1 * k2 * k3 + k2 * k3 * k4 + k3 * k4 * k1 + k4 * k1 * k2);
  t.product = -12.0 * k1 * k2 * k3 * k4;
  t.mixed = -2.0 * (k1 * k2 + k3 * k4) * (k2 * k3 + k4 * k1);
  return t;
}

}  // namespace

double four_flower_poly_residual(double k_inf, double k1, double k2, double k3,
                                 double k4) {
  const QuarticTerms t = quartic_terms(k_inf, k1, k2, k3, k4);
  return t.quartic + t.quadratic + t.cross + t.linear + t.product + t.mixed;
}

double four_flower_poly_scale(double k_inf, double k1, double k2, double k3,
                              double k4) {
  const QuarticTerms t = quartic_terms(k_inf, k1, k2, k3, k4);
  return std::max({std::abs(t.quartic), std::abs(t.quadratic), std::abs(t.cross),
                   std::abs(t.linear), std::abs(t.product), std::abs(t.mixed)});
}

}  // namespace descartes

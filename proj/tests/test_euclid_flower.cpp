#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "descartes/errors.hpp"
#include "descartes/euclid_flower.hpp"
#include "support/generators.hpp"

namespace descartes {
namespace {

using std::numbers::pi;
using std::numbers::sqrt2;
using std::numbers::sqrt3;

TEST(Circle, RejectsBadFields) {
  EXPECT_THROW(Circle(0, 0, 0), DomainError);
  EXPECT_THROW(Circle(0, 0, -1), DomainError);
  EXPECT_THROW(Circle(NAN, 0, 1), DomainError);
  EXPECT_THROW(Circle(0, INFINITY, 1), DomainError);
  EXPECT_THROW(Circle(0, 0, INFINITY), DomainError);
}

TEST(Circle, CurvatureRoundTrip) {
  testing::Gen gen(1);
  for (int i = 0; i < 200; ++i) {
    const double r = gen.log_uniform(1e-6, 1e6);
    const Circle c(0, 0, r);
    EXPECT_NEAR(1.0 / c.curvature(), r, 2 * r * std::numeric_limits<double>::epsilon());
  }
}

TEST(FlowerSpec, Validation) {
  EXPECT_NO_THROW((FlowerSpec{{1, 1, 1}, std::nullopt}.validate()));
  EXPECT_THROW((FlowerSpec{{1, 1}, std::nullopt}.validate()), DomainError);
  EXPECT_THROW((FlowerSpec{{1, 0, 1}, std::nullopt}.validate()), DomainError);
  EXPECT_THROW((FlowerSpec{{1, 1, 1}, 0.0}.validate()), DomainError);
  EXPECT_THROW((FlowerSpec{{1, 1, 1}, -2.0}.validate()), DomainError);
}

// Two equal petals of radius r touching a central circle of radius R form an
// isosceles triangle with legs R + r and base 2r.
double isosceles_gap(double R, double r) { return 2.0 * std::asin(r / (R + r)); }

TEST(AngleGap, SymmetricThreeFlower) {
  const double R = 1.0 / (3.0 + 2.0 * sqrt3);
  EXPECT_NEAR(angle_gap(R, 1, 1), 2.0 * pi / 3.0, 1e-12);
}

TEST(AngleGap, Limits) {
  EXPECT_NEAR(angle_gap(1e8, 1, 1), 2e-8, 1e-14);
  EXPECT_GT(angle_gap(1e8, 1, 1), 0.0);
  EXPECT_NEAR(angle_gap(1e-8, 1, 1), pi, 1e-3);
  EXPECT_LT(angle_gap(1e-8, 1, 1), pi);
}

TEST(AngleGap, MatchesIsoscelesOracle) {
  testing::Gen gen(2);
  for (int i = 0; i < 500; ++i) {
    const double R = gen.log_uniform(1e-3, 1e3);
    const double r = gen.log_uniform(1e-3, 1e3);
    EXPECT_NEAR(angle_gap(R, r, r), isosceles_gap(R, r), 1e-12);
  }
}

TEST(AngleGap, RejectsNonPositive) {
  EXPECT_THROW(angle_gap(0, 1, 1), DomainError);
  EXPECT_THROW(angle_gap(1, -1, 1), DomainError);
  EXPECT_THROW(angle_gap(1, 1, 0), DomainError);
}

TEST(AngleSum, StrictlyDecreasingOnGrid) {
  testing::Gen gen(3);
  for (int t = 0; t < 50; ++t) {
    const auto radii = gen.petals(gen.size(3, 12));
    double prev = INFINITY;
    for (double logR = -6; logR <= 6; logR += 0.05) {
      const double s = angle_sum(std::pow(10.0, logR), radii);
      EXPECT_LT(s, prev);
      prev = s;
    }
  }
}

TEST(AngleSum, BracketsTwoPi) {
  const std::vector<double> radii{1, 2, 3};
  EXPECT_GE(angle_sum(1e-20, radii), 3.0 * pi - 1e-8);
  EXPECT_LT(angle_sum(1e12, radii), 1e-10);
}

TEST(SolveCentralRadius, Examples) {
  EXPECT_NEAR(solve_central_radius(std::vector<double>{1, 1, 1}, 1e-12),
              1.0 / (3.0 + 2.0 * sqrt3), 1e-15);
  EXPECT_NEAR(solve_central_radius(std::vector<double>{1, 1, 1, 1}, 1e-12), sqrt2 - 1.0,
              1e-15);
  EXPECT_NEAR(solve_central_radius(std::vector<double>{0.5, 0.5, 0.5}, 1e-12),
              0.5 / (3.0 + 2.0 * sqrt3), 1e-15);
  EXPECT_NEAR(solve_central_radius(std::vector<double>{0.5, 0.5, 0.5}, 1e-12), 0.0773503,
              1e-7);
}

TEST(SolveCentralRadius, SymmetricFlowersMatchClosedForm) {
  for (std::size_t n = 3; n <= 40; ++n) {
    const std::vector<double> radii(n, 1.0);
    const double expected = 1.0 / std::sin(pi / n) - 1.0;
    EXPECT_NEAR(solve_central_radius(radii, 1e-12), expected, 1e-14 * (1 + expected))
        << "n=" << n;
  }
}

TEST(SolveCentralRadius, ScaleCovariance) {
  testing::Gen gen(4);
  for (int t = 0; t < 200; ++t) {
    auto radii = gen.petals(gen.size(3, 10));
    const double s = gen.log_uniform(1e-3, 1e3);
    const double R = solve_central_radius(radii, 1e-12);
    for (double& r : radii) r *= s;
    EXPECT_NEAR(solve_central_radius(radii, 1e-12) / (s * R), 1.0, 1e-14);
  }
}

TEST(SolveCentralRadius, RejectsBadInput) {
  EXPECT_THROW(solve_central_radius(std::vector<double>{1, 1}, 1e-9), DomainError);
  EXPECT_THROW(solve_central_radius(std::vector<double>{1, -1, 1}, 1e-9), DomainError);
  EXPECT_THROW(solve_central_radius(std::vector<double>{1, 1, 1}, 0.0), DomainError);
}

TEST(LayoutFlower, SymmetricThree) {
  const FlowerLayout layout = layout_flower(std::vector<double>{1, 1, 1}, 1e-12);
  EXPECT_EQ(layout.central.cx(), 0.0);
  EXPECT_EQ(layout.central.cy(), 0.0);
  for (std::size_t j = 0; j < 3; ++j) {
    const Circle& p = layout.petals[j];
    EXPECT_NEAR(std::hypot(p.cx(), p.cy()), 1.1547005383792515, 1e-12);
    const double angle = std::atan2(p.cy(), p.cx());
    EXPECT_NEAR(std::remainder(angle - 2.0 * pi * j / 3.0, 2.0 * pi), 0.0, 1e-12);
  }
}

TEST(LayoutFlower, SymmetricFour) {
  const FlowerLayout layout = layout_flower(std::vector<double>{1, 1, 1, 1}, 1e-12);
  for (std::size_t j = 0; j < 4; ++j) {
    const Circle& p = layout.petals[j];
    EXPECT_NEAR(std::hypot(p.cx(), p.cy()), sqrt2, 1e-12);
    EXPECT_NEAR(std::remainder(std::atan2(p.cy(), p.cx()) - pi * j / 2.0, 2.0 * pi), 0.0,
                1e-12);
  }
}

TEST(LayoutFlower, RandomLayoutsValidate) {
  testing::Gen gen(5);
  for (int t = 0; t < 300; ++t) {
    const auto radii = gen.petals(gen.size(3, 16));
    const FlowerLayout layout = layout_flower(radii, 1e-12);
    EXPECT_TRUE(validate_flower(layout).passed(1e-9));
    EXPECT_EQ(layout.size(), radii.size());
  }
}

TEST(ValidateFlower, DetectsBrokenTangency) {
  FlowerLayout layout = layout_flower(std::vector<double>{1, 2, 3}, 1e-12);
  const Circle& p = layout.petals[1];
  layout.petals[1] = Circle(p.cx() * 1.001, p.cy() * 1.001, p.r());
  EXPECT_FALSE(validate_flower(layout).passed(1e-9));
  EXPECT_GT(validate_flower(layout).max_residual(), 1e-4);
}

TEST(NormalizeLayout, UnitCentral) {
  const FlowerLayout layout = layout_flower(std::vector<double>{1, 2, 3, 4}, 1e-12);
  const FlowerLayout unit = normalize_layout(layout);
  EXPECT_NEAR(unit.central.r(), 1.0, 1e-15);
  EXPECT_TRUE(validate_flower(unit).passed(1e-9));
  for (std::size_t j = 0; j < 4; ++j) {
    EXPECT_NEAR(unit.petals[j].curvature(),
                layout.petals[j].curvature() / layout.central.curvature(), 1e-12);
  }
}

TEST(Invert, Examples) {
  const Circle a = invert_in_unit_circle(Circle(2, 0, 1));
  EXPECT_NEAR(a.cx(), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(a.cy(), 0.0, 1e-15);
  EXPECT_NEAR(a.r(), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(a.curvature(), 3.0, 1e-14);

  const Circle b = invert_in_unit_circle(Circle(0.5, 0, 0.25));
  EXPECT_NEAR(b.cx(), 8.0 / 3.0, 1e-14);
  EXPECT_NEAR(b.r(), 4.0 / 3.0, 1e-14);
}

TEST(Invert, ThroughOriginIsAnError) {
  EXPECT_THROW(invert_in_unit_circle(Circle(1, 0, 1)), DomainError);
  EXPECT_THROW(invert_in_unit_circle(Circle(0, -2, 2)), DomainError);
}

TEST(Invert, Involution) {
  testing::Gen gen(6);
  for (int t = 0; t < 500; ++t) {
    const double r = gen.log_uniform(0.01, 10);
    const double d = gen.coin() ? r + gen.log_uniform(0.01, 10) : r * gen.uniform(0.0, 0.9);
    const double phi = gen.uniform(0, 2 * pi);
    const Circle c(d * std::cos(phi), d * std::sin(phi), r);
    const Circle back = invert_in_unit_circle(invert_in_unit_circle(c));
    const double scale = 1e-10 * (1 + d + r);
    EXPECT_NEAR(back.cx(), c.cx(), scale);
    EXPECT_NEAR(back.cy(), c.cy(), scale);
    EXPECT_NEAR(back.r(), c.r(), scale);
  }
}

TEST(InvertedFlower, CurvatureShiftsByTwo) {
  const FlowerLayout unit =
      normalize_layout(layout_flower(std::vector<double>{1, 1, 1}, 1e-12));
  const auto images = inverted_flower(unit);
  ASSERT_EQ(images.size(), 3u);
  // Normalized petals have curvature 1/kappa_inf = (2 sqrt(3) - 3) / 3.
  for (const Circle& c : images) EXPECT_NEAR(c.curvature(), (2.0 * sqrt3 - 3.0) / 3.0 + 2.0, 1e-12);
}

TEST(InvertedFlower, RandomFlowers) {
  testing::Gen gen(7);
  for (int t = 0; t < 200; ++t) {
    const auto radii = gen.petals(gen.size(3, 12));
    const FlowerLayout unit = normalize_layout(layout_flower(radii, 1e-12));
    const auto images = inverted_flower(unit);
    for (std::size_t j = 0; j < images.size(); ++j) {
      EXPECT_NEAR(images[j].curvature() - unit.petals[j].curvature(), 2.0, 1e-9);
      // internally tangent to the unit circle
      EXPECT_NEAR(std::hypot(images[j].cx(), images[j].cy()) + images[j].r(), 1.0, 1e-9);
    }
  }
}

TEST(InvertedFlower, RequiresUnitCentral) {
  const FlowerLayout layout = layout_flower(std::vector<double>{1, 1, 1}, 1e-12);
  EXPECT_THROW(inverted_flower(layout), DomainError);
}

TEST(ClassicDescartes, Examples) {
  EXPECT_NEAR(classic_descartes_residual(3 + 2 * sqrt3, 1, 1, 1), 0.0, 1e-9);
  EXPECT_EQ(classic_descartes_residual(1, 0, 4, 1), 0.0);
  EXPECT_EQ(classic_descartes_residual(0, 0, 0, 0), 0.0);
  // (a+b+c+d)^2 - 2(a^2+b^2+c^2+d^2) at (1,2,3,4): 100 - 60
  EXPECT_EQ(classic_descartes_residual(1, 2, 3, 4), 40.0);
}

// a + b sqrt(2) with integer parts, for exact evaluation at sqrt(2) + 1.
struct Sqrt2Int {
  long long a = 0, b = 0;
  Sqrt2Int operator+(Sqrt2Int o) const { return {a + o.a, b + o.b}; }
  Sqrt2Int operator-(Sqrt2Int o) const { return {a - o.a, b - o.b}; }
  Sqrt2Int operator*(Sqrt2Int o) const { return {a * o.a + 2 * b * o.b, a * o.b + b * o.a}; }
  Sqrt2Int operator*(long long k) const { return {a * k, b * k}; }
};

TEST(FourFlowerPolynomial, ExactCancellationAtSymmetricFlower) {
  const Sqrt2Int k{1, 1};
  const Sqrt2Int one{1, 0};
  const Sqrt2Int k2 = k * k;
  // Unit petals: every pair product is 1, every triple product is 1.
  const Sqrt2Int value = k2 * k2 * 16 - k2 * 8 * 8 + one * 4 - k * 16 * 4 - one * 12 -
                         one * 2 * 2 * 2 * 1;
  EXPECT_EQ(value.a, 0);
  EXPECT_EQ(value.b, 0);
  EXPECT_NEAR(four_flower_poly_residual(sqrt2 + 1, 1, 1, 1, 1), 0.0, 1e-12);
}

TEST(FourFlowerPolynomial, Examples) {
  EXPECT_EQ(four_flower_poly_residual(1, 0, 0, 0, 0), 16.0);
  EXPECT_EQ(four_flower_poly_scale(1, 0, 0, 0, 0), 16.0);
}

TEST(ClassicRelations, VanishOnSolvedFlowers) {
  testing::Gen gen(8);
  for (int t = 0; t < 300; ++t) {
    const auto k3 = gen.petals(3);
    std::vector<double> r3{1 / k3[0], 1 / k3[1], 1 / k3[2]};
    const double c3 = 1.0 / solve_central_radius(r3, 1e-12);
    EXPECT_LT(std::abs(classic_descartes_residual(c3, k3[0], k3[1], k3[2])) /
                  classic_descartes_scale(c3, k3[0], k3[1], k3[2]),
              1e-12);

    const auto k4 = gen.petals(4);
    std::vector<double> r4{1 / k4[0], 1 / k4[1], 1 / k4[2], 1 / k4[3]};
    const double c4 = 1.0 / solve_central_radius(r4, 1e-12);
    EXPECT_LT(std::abs(four_flower_poly_residual(c4, k4[0], k4[1], k4[2], k4[3])) /
                  four_flower_poly_scale(c4, k4[0], k4[1], k4[2], k4[3]),
              1e-10);
  }
}

TEST(ClassicRelations, ScaleCovariance) {
  testing::Gen gen(9);
  for (int t = 0; t < 100; ++t) {
    const auto k = gen.petals(3);
    std::vector<double> r{1 / k[0], 1 / k[1], 1 / k[2]};
    const double c = 1.0 / solve_central_radius(r, 1e-12);
    const double s = gen.log_uniform(0.1, 10);
    const double scaled = classic_descartes_residual(c / s, k[0] / s, k[1] / s, k[2] / s);
    EXPECT_LT(std::abs(scaled) / classic_descartes_scale(c / s, k[0] / s, k[1] / s, k[2] / s),
              1e-12);
  }
}

}  // namespace
}  // namespace descartes

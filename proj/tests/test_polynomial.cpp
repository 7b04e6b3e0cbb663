#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "descartes/errors.hpp"
#include "descartes/m_variables.hpp"
#include "descartes/polynomial.hpp"
#include "support/generators.hpp"

namespace descartes {
namespace {

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(DESCARTES_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

PolynomialZZ m(std::size_t n, std::size_t i, unsigned p = 1) {
  return PolynomialZZ::variable(n, i, p);
}

PolynomialZZ c(std::size_t n, long v) { return PolynomialZZ::constant(n, Integer(v)); }

TEST(ExpandTheoremPolynomial, GoldenThree) {
  const std::string text = expand_theorem_polynomial(3).serialize();
  EXPECT_EQ(text, read_golden("poly3.txt"));
  // m0^2 m1 + m0^2 m2 - m1^2 - 1
  const PolynomialZZ expected = m(3, 0, 2) * m(3, 1) + m(3, 0, 2) * m(3, 2) - m(3, 1, 2) - c(3, 1);
  EXPECT_EQ(expand_theorem_polynomial(3), expected);
}

TEST(ExpandTheoremPolynomial, GoldenFour) {
  EXPECT_EQ(expand_theorem_polynomial(4).serialize(), read_golden("poly4.txt"));
  // m1 m2 + m2 m3 + m1 m3 - m2^2 - 2
  const PolynomialZZ expected = m(4, 1) * m(4, 2) + m(4, 2) * m(4, 3) + m(4, 1) * m(4, 3) -
                                m(4, 2, 2) - c(4, 2);
  EXPECT_EQ(expand_theorem_polynomial(4), expected);
}

TEST(ExpandTheoremPolynomial, SizeLimits) {
  EXPECT_THROW(expand_theorem_polynomial(2), DomainError);
  EXPECT_THROW(expand_theorem_polynomial(25), CapacityError);
}

TEST(ExpandTheoremPolynomial, MatchesSubsetResidual) {
  testing::Gen gen(40);
  for (std::size_t n = 3; n <= 10; ++n) {
    const PolynomialZZ p = expand_theorem_polynomial(n);
    for (int t = 0; t < 30; ++t) {
      const MVector mv = gen.m_vector(n, 0.0, 3.0);
      const TheoremSides s = theorem_sides_subset(mv);
      const double scale = std::max({std::abs(s.lhs), std::abs(s.rhs), 1.0});
      EXPECT_NEAR(p.evaluate(mv.values()), s.residual(), 1e-10 * scale) << "n=" << n;
    }
  }
}

TEST(ExpandTheoremPolynomial, FiveMatchesComplexForm) {
  testing::Gen gen(41);
  const PolynomialZZ p = expand_theorem_polynomial(5);
  for (int t = 0; t < 100; ++t) {
    const MVector mv = gen.m_vector(5);
    const TheoremSides s = theorem_sides_complex(mv);
    const double scale = std::max({std::abs(s.lhs), std::abs(s.rhs), 1.0});
    EXPECT_NEAR(p.evaluate(mv.values()), s.residual(), 1e-10 * scale);
  }
}

TEST(ExpandTheoremPolynomial, RhsCoefficientsAreBinomialProducts) {
  // For n = 7 the right side (m1^2+1)(m3^2+1)(m5^2+1) contributes a constant
  // -1 and, e.g., -1 m1^2 m3^2 m5^2.
  const PolynomialZZ p = expand_theorem_polynomial(7);
  bool saw_constant = false, saw_top = false;
  for (const auto& t : p.terms()) {
    if (t.degree() == 0) {
      saw_constant = true;
      EXPECT_EQ(t.coefficient, -1);
    }
    if (t.exponents[1] == 2 && t.exponents[3] == 2 && t.exponents[5] == 2) {
      saw_top = true;
      EXPECT_EQ(t.coefficient, -1);
    }
  }
  EXPECT_TRUE(saw_constant);
  EXPECT_TRUE(saw_top);
}

TEST(PolynomialZZ, CanonicalForm) {
  const std::size_t n = 3;
  PolynomialZZ::Exponents e{};
  e[1] = 1;
  std::vector<PolynomialZZ::Term> terms;
  terms.push_back({Integer(2), e});
  terms.push_back({Integer(-2), e});
  terms.push_back({Integer(5), {}});
  const PolynomialZZ p(n, terms);
  EXPECT_EQ(p.num_terms(), 1u);
  EXPECT_EQ(p.serialize(), "5 0 0 0\n");
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).serialize(), "");
}

TEST(PolynomialZZ, GradedLexOrder) {
  PolynomialZZ::Exponents a{}, b{};
  a[0] = 1;
  b[1] = 2;
  EXPECT_TRUE(graded_lex_before(b, a));  // higher degree first
  a[0] = 2;
  EXPECT_TRUE(graded_lex_before(a, b));  // same degree: larger m0 exponent first
  EXPECT_FALSE(graded_lex_before(a, a));
}

TEST(PolynomialZZ, ParseRoundTrip) {
  for (std::size_t n = 3; n <= 8; ++n) {
    const PolynomialZZ p = expand_theorem_polynomial(n);
    EXPECT_EQ(PolynomialZZ::parse(n, p.serialize()), p);
  }
}

TEST(PolynomialZZ, ParseRejectsMalformed) {
  EXPECT_THROW(PolynomialZZ::parse(3, "1 2 1\n"), DomainError);
  EXPECT_THROW(PolynomialZZ::parse(3, "x 0 0 0\n"), DomainError);
  EXPECT_THROW(PolynomialZZ::parse(3, "1 0 0 -1\n"), DomainError);
  EXPECT_THROW(PolynomialZZ::parse(3, "1 0 0 0 0\n"), DomainError);
}

TEST(PolynomialZZ, RingAxiomsOnRandomPolynomials) {
  testing::Gen gen(42);
  auto random_poly = [&gen](std::size_t n) {
    PolynomialZZ p(n);
    for (int t = 0; t < 4; ++t) {
      PolynomialZZ term = c(n, static_cast<long>(gen.size(0, 20)) - 10);
      for (std::size_t i = 0; i < n; ++i) {
        const auto power = static_cast<unsigned>(gen.size(0, 2));
        if (power) term = term * m(n, i, power);
      }
      p = p + term;
    }
    return p;
  };
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = gen.size(1, 4);
    const PolynomialZZ a = random_poly(n), b = random_poly(n), d = random_poly(n);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) * d, a * d + b * d);
    EXPECT_EQ((a * b) * d, a * (b * d));
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(-(-a), a);

    std::vector<double> point(n);
    for (double& x : point) x = gen.uniform(-1.5, 1.5);
    EXPECT_NEAR((a * b).evaluate(point), a.evaluate(point) * b.evaluate(point),
                1e-9 * (1 + std::abs(a.evaluate(point) * b.evaluate(point))));
  }
}

TEST(PolynomialZZ, BigCoefficientsStayExact) {
  // (m0 + 1)^70 has central binomial coefficients far beyond 64 bits.
  PolynomialZZ p = c(1, 1);
  const PolynomialZZ base = m(1, 0) + c(1, 1);
  for (int i = 0; i < 70; ++i) p = p * base;
  Integer max_coefficient = 0;
  for (const auto& t : p.terms()) max_coefficient = std::max(max_coefficient, t.coefficient);
  EXPECT_EQ(max_coefficient.str(), "112186277816662845432");  // C(70, 35)
}

TEST(PolynomialZZ, RejectsMismatchedVariables) {
  EXPECT_THROW(c(2, 1) + c(3, 1), DomainError);
  EXPECT_THROW(PolynomialZZ(25), CapacityError);
  EXPECT_THROW(c(2, 1).evaluate(std::vector<double>{1.0}), DomainError);
}

}  // namespace
}  // namespace descartes

#include "descartes/m_variables.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "descartes/errors.hpp"

namespace descartes {

namespace {

void require_theorem_size(const MVector& m) {
  if (m.size() < 3) throw DomainError("the theorem needs n >= 3 m-variables");
}

}  // namespace

MVector::MVector(std::vector<double> values) : m_(std::move(values)) {
  for (double v : m_) {
    if (!std::isfinite(v) || v < 0.0) {
      throw DomainError("m-variables must be finite and non-negative");
    }
  }
}

std::vector<double> normalize_curvatures(const FlowerSpec& spec) {
  if (!spec.central_curvature) throw DomainError("central curvature is required");
  const double k_inf = *spec.central_curvature;
  if (!(k_inf > 0.0) || !std::isfinite(k_inf)) {
    throw DomainError("central curvature must be positive and finite");
  }
  std::vector<double> out;
  out.reserve(spec.size());
  for (double k : spec.petal_curvatures) out.push_back(k / k_inf);
  return out;
}

MVector m_from_normalized(std::span<const double> k) {
  if (k.empty()) throw DomainError("no curvatures given");
  std::vector<double> m(k.size());
  const double head = k[0] + 1.0;
  if (head < 0.0) throw DomainError("negative radicand for m_0");
  m[0] = std::sqrt(head);
  for (std::size_t j = 1; j < k.size(); ++j) {
    const double radicand = (k[j] + 1.0) * (k[j - 1] + 1.0) - 1.0;
    if (radicand < 0.0) {
      throw DomainError("negative radicand for m_" + std::to_string(j));
    }
    m[j] = std::sqrt(radicand);
  }
  return MVector(std::move(m));
}

double g_product(const MVector& m, std::size_t j) {
  if (j >= m.size()) throw DomainError("g_product index out of range");
  const double m0sq = m[0] * m[0];
  if (j == 0) return m0sq;

  auto factor = [&m](std::size_t k) { return m[k] * m[k] + 1.0; };
  double num = 1.0;
  double den = 1.0;
  if (j % 2 == 0) {
    num = m0sq;
    for (std::size_t k = 1; k <= j / 2; ++k) {
      num *= factor(2 * k);
      den *= factor(2 * k - 1);
    }
  } else {
    for (std::size_t k = 0; k <= (j - 1) / 2; ++k) num *= factor(2 * k + 1);
    den = m0sq;
    for (std::size_t k = 1; k <= (j - 1) / 2; ++k) den *= factor(2 * k);
  }
  if (den == 0.0) throw DomainError("g_product denominator vanishes (m_0 = 0)");
  return num / den;
}

double TheoremSides::relative_residual() const noexcept {
  return std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1.0});
}

double theorem_rhs(const MVector& m) {
  require_theorem_size(m);
  const std::size_t n = m.size();
  double rhs = 1.0;
  if (n % 2 == 1) {
    for (std::size_t j = 1; j <= (n - 1) / 2; ++j) rhs *= m[2 * j - 1] * m[2 * j - 1] + 1.0;
  } else {
    for (std::size_t j = 1; j <= (n - 2) / 2; ++j) rhs *= m[2 * j] * m[2 * j] + 1.0;
  }
  return rhs;
}

TheoremSides theorem_sides_complex(const MVector& m) {
  require_theorem_size(m);
  const std::size_t n = m.size();
  using cplx = std::complex<double>;
  cplx minus(1.0, 0.0);
  cplx plus(1.0, 0.0);
  for (std::size_t j = 1; j < n; ++j) {
    minus *= cplx(m[j], -1.0);
    plus *= cplx(m[j], 1.0);
  }
  const double prefactor = n % 2 == 1 ? m[0] * m[0] : 1.0;
  const cplx lhs = prefactor * cplx(0.0, 0.5) * (minus - plus);

  const double scale = std::max({1.0, prefactor * std::abs(plus)});
  if (std::abs(lhs.imag()) > 1e-12 * scale) {
    throw NumericError("complex-form theorem has a non-real left side");
  }
  return {lhs.real(), theorem_rhs(m)};
}

double theorem_residual_complex(const MVector& m) {
  return theorem_sides_complex(m).residual();
}

TheoremSides theorem_sides_subset(const MVector& m) {
  require_theorem_size(m);
  const std::size_t n = m.size();
  const std::size_t vars = n - 1;

  // e[k] = elementary symmetric polynomial of degree k in m_1 .. m_{n-1}.
  std::vector<double> e(vars + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t k = j; k >= 1; --k) e[k] += m[j] * e[k - 1];
  }

  // |K| = n - 2l - 2 for l = 0, 1, ... while |K| >= 0.
  double sum = 0.0;
  for (std::size_t l = 0; 2 * l + 2 <= n; ++l) {
    const double term = e[n - 2 * l - 2];
    sum += (l % 2 == 0) ? term : -term;
  }
  const double prefactor = n % 2 == 1 ? m[0] * m[0] : 1.0;
  return {prefactor * sum, theorem_rhs(m)};
}

double theorem_residual_subset(const MVector& m) {
  return theorem_sides_subset(m).residual();
}

}  // namespace descartes

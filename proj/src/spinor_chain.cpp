#include "descartes/spinor_chain.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "descartes/errors.hpp"

namespace descartes {

namespace {

// The recursion and the flat-flower normalization lose a digit or two per
// step in double; carrying them in long double keeps the closing bracket of
// solved flowers at the level of the input rounding.
using wide = long double;

struct WideSpinor {
  wide xi;
  wide eta;
};

std::vector<Spinor> narrow(const std::vector<WideSpinor>& in) {
  std::vector<Spinor> out;
  out.reserve(in.size());
  for (const WideSpinor& s : in) {
    out.emplace_back(static_cast<double>(s.xi), static_cast<double>(s.eta));
  }
  return out;
}

}  // namespace

SpinorChain::SpinorChain(std::vector<Spinor> spinors, double tol)
    : spinors_(std::move(spinors)) {
  if (spinors_.empty()) throw NumericError("empty spinor chain");
  if (spinors_[0].xi() != 0.0 || !(spinors_[0].eta() > 0.0)) {
    throw NumericError("spinor chain must start at (0, eta_0) with eta_0 > 0");
  }
  for (std::size_t j = 0; j + 1 < spinors_.size(); ++j) {
    const double b = bracket(spinors_[j], spinors_[j + 1]);
    const double scale = std::max(1.0, std::abs(spinors_[j].xi() * spinors_[j + 1].eta()));
    if (!(std::abs(b + 1.0) <= tol * scale)) {
      throw NumericError("consecutive bracket {alpha_" + std::to_string(j) +
                         ", alpha_" + std::to_string(j + 1) + "} is not -1");
    }
  }
}

std::vector<double> SpinorChain::xis() const {
  std::vector<double> out;
  out.reserve(size());
  for (const Spinor& s : spinors_) out.push_back(s.xi());
  return out;
}

std::vector<double> SpinorChain::etas() const {
  std::vector<double> out;
  out.reserve(size());
  for (const Spinor& s : spinors_) out.push_back(s.eta());
  return out;
}

std::complex<double> SpinorChain::z(std::size_t j) const noexcept {
  return {spinors_[j].xi(), spinors_[j].eta()};
}

std::vector<double> SpinorChain::flat_curvatures() const {
  std::vector<double> out;
  out.reserve(size());
  for (const Spinor& s : spinors_) out.push_back(2.0 * s.eta() * s.eta());
  return out;
}

SpinorChain spinor_recursion(const MVector& m) {
  const std::size_t n = m.size();
  if (n == 0) throw DomainError("empty m-vector");
  if (!(m[0] > 0.0)) throw NumericError("degenerate input: m_0 = 0 gives eta_0 = 0");

  std::vector<WideSpinor> chain;
  chain.reserve(n);
  chain.push_back({0.0L, static_cast<wide>(m[0])});
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const auto [xi, eta] = chain.back();
    if (eta == 0.0L) {
      throw NumericError("degenerate input: eta_" + std::to_string(j) + " = 0");
    }
    const wide disc_minus_one = xi * xi + eta * eta;
    const wide next_eta = (-xi + eta * static_cast<wide>(m[j + 1])) / disc_minus_one;
    const wide next_xi = (next_eta / eta) * xi + 1.0L / eta;
    chain.push_back({next_xi, next_eta});
  }
  if (chain.back().eta == 0.0L) {
    throw NumericError("degenerate input: eta_" + std::to_string(n - 1) + " = 0");
  }
  return SpinorChain(narrow(chain));
}

double eta_closed_form(const MVector& m, std::size_t j) {
  if (j >= m.size()) throw DomainError("eta_closed_form index out of range");
  using cplx = std::complex<wide>;
  cplx minus(1.0L, 0.0L);
  cplx plus(1.0L, 0.0L);
  for (std::size_t k = 1; k <= j; ++k) {
    minus *= cplx(m[k], -1.0L);
    plus *= cplx(m[k], 1.0L);
  }
  const cplx sum = minus + plus;
  const wide scale = std::max(wide{1}, std::abs(plus));
  if (std::abs(sum.imag()) > 1e-12L * scale) {
    throw NumericError("closed form for eta has a non-real value");
  }

  auto factor = [&m](std::size_t k) { return static_cast<wide>(m[k]) * m[k] + 1.0L; };
  const wide m0 = m[0];
  wide value;
  if (j % 2 == 0) {
    wide den = 2.0L;
    for (std::size_t k = 1; k <= j / 2; ++k) den *= factor(2 * k - 1);
    value = m0 * sum.real() / den;
  } else {
    if (m0 == 0.0L) throw DomainError("closed form for odd j needs m_0 != 0");
    wide den = 2.0L * m0;
    for (std::size_t k = 1; k <= (j - 1) / 2; ++k) den *= factor(2 * k);
    value = sum.real() / den;
  }
  return static_cast<double>(value);
}

double xi_from_etas(std::span<const double> etas, std::size_t j) {
  if (j == 0 || j >= etas.size()) throw DomainError("xi_from_etas needs 1 <= j < n");
  for (std::size_t k = 0; k < j; ++k) {
    if (etas[k] == 0.0) throw DomainError("zero eta in telescoping sum");
  }
  wide sum = 0.0L;
  for (std::size_t k = 1; k < j; ++k) {
    sum += 1.0L / (static_cast<wide>(etas[k - 1]) * etas[k]);
  }
  return static_cast<double>(1.0L / etas[j - 1] + etas[j] * sum);
}

ClosureResiduals closure_residuals(const SpinorChain& chain) {
  const std::size_t n = chain.size();
  ClosureResiduals r;
  r.bracket = bracket(chain[0], chain[n - 1]) + 1.0;
  wide sum = 0.0L;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    sum += 1.0L / (static_cast<wide>(chain[j].eta()) * chain[j + 1].eta());
  }
  sum -= 1.0L / (static_cast<wide>(chain[0].eta()) * chain[n - 1].eta());
  r.eta_sum = static_cast<double>(sum);
  return r;
}

double flat_flower_residual(std::span<const double> k) {
  const std::size_t n = k.size();
  if (n < 2) throw DomainError("flat flower needs at least two curvatures");
  for (double v : k) {
    if (!(v > 0.0)) throw DomainError("flat-flower curvatures must be positive");
  }
  wide sum = 0.0L;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    sum += 1.0L / std::sqrt(static_cast<wide>(k[j]) * k[j + 1]);
  }
  sum -= 1.0L / std::sqrt(static_cast<wide>(k[0]) * k[n - 1]);
  return static_cast<double>(sum);
}

SpinorChain flatten_chain(const SpinorChain& chain) {
  const std::size_t n = chain.size();
  constexpr wide pi = std::numbers::pi_v<wide>;

  // A spinor's direction angle psi (mod pi) fixes its tangency point
  // cot(psi); tangency points increase as psi decreases, and psi = 0 is
  // infinity. Rotate so the gap from alpha_{n-1} down to alpha_0 straddles 0.
  auto direction = [](const Spinor& s) {
    wide psi = std::atan2(static_cast<wide>(s.eta()), static_cast<wide>(s.xi()));
    psi = std::fmod(psi, pi);
    return psi < 0 ? psi + pi : psi;
  };
  const wide first = direction(chain[0]);
  const wide last = direction(chain[n - 1]);
  wide gap = std::fmod(last - first, pi);
  if (gap < 0) gap += pi;
  const wide theta = gap / 2 - last;
  const wide c = std::cos(theta);
  const wide s = std::sin(theta);

  std::vector<WideSpinor> out;
  out.reserve(n);
  for (const Spinor& a : chain.spinors()) {
    out.push_back({c * a.xi() - s * a.eta(), s * a.xi() + c * a.eta()});
  }
  if (out[0].eta < 0) {
    for (WideSpinor& a : out) a = {-a.xi, -a.eta};
  }
  for (const WideSpinor& a : out) {
    if (!(a.eta > 0)) throw NumericError("chain does not close into a flat flower");
  }
  const wide shift = -out[0].xi / out[0].eta;
  for (WideSpinor& a : out) a.xi += shift * a.eta;
  out[0].xi = 0.0L;
  return SpinorChain(narrow(out));
}

std::vector<double> parallelogram_areas(const SpinorChain& chain) {
  const std::size_t n = chain.size();
  std::vector<double> areas;
  areas.reserve(n);
  for (std::size_t j = 1; j < n; ++j) {
    areas.push_back((chain.z(j - 1) * std::conj(chain.z(j))).imag());
  }
  areas.push_back((chain.z(0) * std::conj(chain.z(n - 1))).imag());
  return areas;
}

std::vector<double> consecutive_real_parts(const SpinorChain& chain) {
  std::vector<double> out;
  out.reserve(chain.size());
  for (std::size_t j = 1; j < chain.size(); ++j) {
    out.push_back((chain.z(j - 1) * std::conj(chain.z(j))).real());
  }
  return out;
}

}  // namespace descartes

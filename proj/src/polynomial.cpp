#include "descartes/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>

#include "descartes/errors.hpp"

namespace descartes {

namespace {

void require_variables(std::size_t n) {
  if (n > PolynomialZZ::kMaxVariables) {
    throw CapacityError("polynomials support at most " +
                        std::to_string(PolynomialZZ::kMaxVariables) + " variables");
  }
}

}  // namespace

unsigned PolynomialZZ::Term::degree() const noexcept {
  return std::accumulate(exponents.begin(), exponents.end(), 0u);
}

bool graded_lex_before(const PolynomialZZ::Exponents& a,
                       const PolynomialZZ::Exponents& b) noexcept {
  const unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  const unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

PolynomialZZ::PolynomialZZ(std::size_t num_variables) : num_variables_(num_variables) {
  require_variables(num_variables);
}

PolynomialZZ::PolynomialZZ(std::size_t num_variables, std::vector<Term> terms)
    : num_variables_(num_variables), terms_(std::move(terms)) {
  require_variables(num_variables);
  for (const Term& t : terms_) {
    for (std::size_t v = num_variables_; v < kMaxVariables; ++v) {
      if (t.exponents[v] != 0) {
        throw DomainError("term uses a variable beyond num_variables");
      }
    }
  }
  canonicalize();
}

PolynomialZZ PolynomialZZ::constant(std::size_t num_variables, Integer value) {
  std::vector<Term> terms;
  terms.push_back(Term{std::move(value), {}});
  return PolynomialZZ(num_variables, std::move(terms));
}

PolynomialZZ PolynomialZZ::variable(std::size_t num_variables, std::size_t index,
                                    unsigned power) {
  if (index >= num_variables) throw DomainError("variable index out of range");
  if (power > 255) throw CapacityError("exponent exceeds 255");
  Term t{Integer(1), {}};
  t.exponents[index] = static_cast<std::uint8_t>(power);
  std::vector<Term> terms;
  terms.push_back(std::move(t));
  return PolynomialZZ(num_variables, std::move(terms));
}

void PolynomialZZ::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    return graded_lex_before(a.exponents, b.exponents);
  });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (Term& t : terms_) {
    if (!merged.empty() && merged.back().exponents == t.exponents) {
      merged.back().coefficient += t.coefficient;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coefficient == 0; });
  terms_ = std::move(merged);
}

void PolynomialZZ::check_compatible(const PolynomialZZ& other) const {
  if (num_variables_ != other.num_variables_) {
    throw DomainError("polynomials over different variable counts");
  }
}

unsigned PolynomialZZ::degree() const noexcept {
  // Canonical order puts the highest total degree first.
  return terms_.empty() ? 0u : terms_.front().degree();
}

double PolynomialZZ::evaluate(std::span<const double> point) const {
  if (point.size() != num_variables_) {
    throw DomainError("evaluation point has the wrong dimension");
  }
  long double sum = 0.0L;
  for (const Term& t : terms_) {
    long double value = t.coefficient.convert_to<long double>();
    for (std::size_t v = 0; v < num_variables_; ++v) {
      for (unsigned e = 0; e < t.exponents[v]; ++e) value *= point[v];
    }
    sum += value;
  }
  return static_cast<double>(sum);
}

PolynomialZZ PolynomialZZ::operator+(const PolynomialZZ& rhs) const {
  check_compatible(rhs);
  std::vector<Term> terms = terms_;
  terms.insert(terms.end(), rhs.terms_.begin(), rhs.terms_.end());
  return PolynomialZZ(num_variables_, std::move(terms));
}

PolynomialZZ PolynomialZZ::operator-() const {
  PolynomialZZ out = *this;
  for (Term& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

PolynomialZZ PolynomialZZ::operator-(const PolynomialZZ& rhs) const {
  return *this + (-rhs);
}

PolynomialZZ PolynomialZZ::operator*(const PolynomialZZ& rhs) const {
  check_compatible(rhs);
  std::vector<Term> terms;
  terms.reserve(terms_.size() * rhs.terms_.size());
  for (const Term& a : terms_) {
    for (const Term& b : rhs.terms_) {
      Term t{a.coefficient * b.coefficient, {}};
      for (std::size_t v = 0; v < num_variables_; ++v) {
        const unsigned e = unsigned{a.exponents[v]} + b.exponents[v];
        if (e > 255) throw CapacityError("exponent exceeds 255");
        t.exponents[v] = static_cast<std::uint8_t>(e);
      }
      terms.push_back(std::move(t));
    }
  }
  return PolynomialZZ(num_variables_, std::move(terms));
}

bool operator==(const PolynomialZZ& a, const PolynomialZZ& b) {
  if (a.num_variables_ != b.num_variables_ || a.terms_.size() != b.terms_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coefficient != b.terms_[i].coefficient ||
        a.terms_[i].exponents != b.terms_[i].exponents) {
      return false;
    }
  }
  return true;
}

void PolynomialZZ::write(std::ostream& out) const {
  for (const Term& t : terms_) {
    out << t.coefficient;
    for (std::size_t v = 0; v < num_variables_; ++v) {
      out << ' ' << static_cast<unsigned>(t.exponents[v]);
    }
    out << '\n';
  }
}

std::string PolynomialZZ::serialize() const {
  std::ostringstream out;
  write(out);
  return out.str();
}

PolynomialZZ PolynomialZZ::parse(std::size_t num_variables, const std::string& text) {
  require_variables(num_variables);
  std::vector<Term> terms;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string coefficient;
    fields >> coefficient;
    Term t{};
    try {
      t.coefficient = Integer(coefficient);
    } catch (const std::exception&) {
      throw DomainError("bad coefficient on line " + std::to_string(line_no));
    }
    for (std::size_t v = 0; v < num_variables; ++v) {
      unsigned e = 0;
      if (!(fields >> e) || e > 255) {
        throw DomainError("bad exponent on line " + std::to_string(line_no));
      }
      t.exponents[v] = static_cast<std::uint8_t>(e);
    }
    std::string extra;
    if (fields >> extra) {
      throw DomainError("too many fields on line " + std::to_string(line_no));
    }
    terms.push_back(std::move(t));
  }
  return PolynomialZZ(num_variables, std::move(terms));
}

PolynomialZZ expand_theorem_polynomial(std::size_t n) {
  if (n < 3) throw DomainError("the theorem polynomial needs n >= 3");
  require_variables(n);

  // Left side: one squarefree monomial per subset K of {1..n-1} with
  // n-1-|K| odd, sign (-1)^l where n-1-|K| = 2l+1; times m_0^2 for odd n.
  const std::size_t vars = n - 1;
  const std::uint32_t subsets = std::uint32_t{1} << vars;
  std::vector<PolynomialZZ::Term> lhs;
  lhs.reserve(subsets / 2);
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    const std::size_t size = static_cast<std::size_t>(std::popcount(mask));
    const std::size_t missing = vars - size;
    if (missing % 2 == 0) continue;
    const std::size_t l = (missing - 1) / 2;
    PolynomialZZ::Term t{Integer(l % 2 == 0 ? 1 : -1), {}};
    if (n % 2 == 1) t.exponents[0] = 2;
    for (std::size_t k = 0; k < vars; ++k) {
      if (mask & (std::uint32_t{1} << k)) t.exponents[k + 1] = 1;
    }
    lhs.push_back(std::move(t));
  }

  // Right side: product of (m_k^2 + 1) over odd k (odd n) or even k >= 2 (even n).
  PolynomialZZ rhs = PolynomialZZ::constant(n, 1);
  const PolynomialZZ one = PolynomialZZ::constant(n, 1);
  for (std::size_t k = (n % 2 == 1) ? 1 : 2; k < n; k += 2) {
    rhs = rhs * (PolynomialZZ::variable(n, k, 2) + one);
  }
  return PolynomialZZ(n, std::move(lhs)) - rhs;
}

}  // namespace descartes

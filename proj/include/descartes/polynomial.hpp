#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace descartes {

using Integer = boost::multiprecision::cpp_int;

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients in variables m_0 .. m_{n-1}, n <= kMaxVariables.
///
/// Terms are kept canonical: no zero coefficients, no repeated monomials,
/// sorted graded-lexicographically (higher total degree first, ties broken by
/// comparing exponents of m_0, m_1, ... with larger first).
class PolynomialZZ {
 public:
  static constexpr std::size_t kMaxVariables = 24;
  using Exponents = std::array<std::uint8_t, kMaxVariables>;

  struct Term {
    Integer coefficient;
    Exponents exponents{};
    unsigned degree() const noexcept;
  };

  explicit PolynomialZZ(std::size_t num_variables);
  /// Canonicalizes: merges duplicates and drops zeros.
  PolynomialZZ(std::size_t num_variables, std::vector<Term> terms);

  static PolynomialZZ constant(std::size_t num_variables, Integer value);
  static PolynomialZZ variable(std::size_t num_variables, std::size_t index,
                               unsigned power = 1);

  std::size_t num_variables() const noexcept { return num_variables_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  unsigned degree() const noexcept;

  double evaluate(std::span<const double> point) const;

  PolynomialZZ operator+(const PolynomialZZ& rhs) const;
  PolynomialZZ operator-(const PolynomialZZ& rhs) const;
  PolynomialZZ operator*(const PolynomialZZ& rhs) const;
  PolynomialZZ operator-() const;

  friend bool operator==(const PolynomialZZ& a, const PolynomialZZ& b);

  /// One term per line: "<coefficient> <e_0> ... <e_{n-1}>\n" in canonical
  /// order. The zero polynomial serializes to the empty string.
  std::string serialize() const;
  void write(std::ostream& out) const;
  /// Inverse of serialize; throws DomainError on malformed input.
  static PolynomialZZ parse(std::size_t num_variables, const std::string& text);

 private:
  void canonicalize();
  void check_compatible(const PolynomialZZ& other) const;

  std::size_t num_variables_;
  std::vector<Term> terms_;
};

/// True when a precedes b in canonical order.
bool graded_lex_before(const PolynomialZZ::Exponents& a,
                       const PolynomialZZ::Exponents& b) noexcept;

/// lhs - rhs of the subset-sum form of the generalized Descartes equation as
/// an exact polynomial in m_0 .. m_{n-1}. Throws DomainError for n < 3 and
/// CapacityError for n > kMaxVariables.
PolynomialZZ expand_theorem_polynomial(std::size_t n);

}  // namespace descartes

#ifndef KNOTSIEVE_POLYNOMIAL_HPP
#define KNOTSIEVE_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace knotsieve {

/// Exact Laurent polynomial in one variable with arbitrary-precision integer
/// coefficients.
///
/// Terms are kept sorted by ascending exponent and no stored coefficient is
/// zero, so structural equality is polynomial equality. The variable is
/// contextual: the bracket uses A, the Jones polynomial uses t = A^-4.
class LaurentPolynomial {
 public:
  struct Term {
    int exponent;
    mpz_class coefficient;

    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPolynomial() = default;
  LaurentPolynomial(long constant);  // NOLINT(google-explicit-constructor)
  LaurentPolynomial(std::initializer_list<std::pair<long, int>> coefficient_exponent);

  static LaurentPolynomial monomial(const mpz_class& coefficient, int exponent);
  /// Builds a polynomial from arbitrary terms, combining like exponents.
  static LaurentPolynomial from_terms(std::vector<Term> terms);

  /// delta = -A^2 - A^-2, the value of a closed loop.
  static const LaurentPolynomial& loop_value();

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  int min_exponent() const;
  int max_exponent() const;
  mpz_class coefficient(int exponent) const;

  /// Multiplies by A^shift.
  LaurentPolynomial shifted(int shift) const;
  /// Substitutes A -> A^factor (factor may be negative, not zero).
  LaurentPolynomial substitute_power(int factor) const;
  /// Inverse of substitute_power: every exponent must be divisible by divisor.
  LaurentPolynomial compress_exponents(int divisor) const;

  LaurentPolynomial pow(unsigned exponent) const;

  /// Exact division; throws std::domain_error if divisor does not divide.
  LaurentPolynomial divide_exact(const LaurentPolynomial& divisor) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);

  friend LaurentPolynomial operator+(LaurentPolynomial lhs, const LaurentPolynomial& rhs) {
    return lhs += rhs;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial lhs, const LaurentPolynomial& rhs) {
    return lhs -= rhs;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs);
  LaurentPolynomial operator-() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// Text form: terms by ascending exponent as `c*A^e`, joined by ` + `, with
  /// negative coefficients written ` - |c|*A^e`; the zero polynomial is `0`.
  std::string to_string(std::string_view variable = "A") const;
  static LaurentPolynomial parse(std::string_view text, std::string_view variable = "A");

 private:
  explicit LaurentPolynomial(std::vector<Term> normalized) : terms_(std::move(normalized)) {}

  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p);

/// Exact value of p at a nonzero integer; throws std::domain_error at 0.
mpq_class evaluate(const LaurentPolynomial& p, long x);

/// True iff p is a single term with coefficient +1 or -1.
bool is_unit_monomial(const LaurentPolynomial& p);

}  // namespace knotsieve

#endif  // KNOTSIEVE_POLYNOMIAL_HPP

#include "knotsieve/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "knotsieve/errors.hpp"

namespace knotsieve {

namespace {

void normalize(std::vector<LaurentPolynomial::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.exponent < b.exponent; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    int e = terms[i].exponent;
    mpz_class sum = 0;
    while (i < terms.size() && terms[i].exponent == e) {
      sum += terms[i].coefficient;
      ++i;
    }
    if (sum != 0) {
      terms[out].exponent = e;
      terms[out].coefficient = std::move(sum);
      ++out;
    }
  }
  terms.resize(out);
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(long constant) {
  if (constant != 0) terms_.push_back({0, mpz_class(constant)});
}

LaurentPolynomial::LaurentPolynomial(
    std::initializer_list<std::pair<long, int>> coefficient_exponent) {
  for (const auto& [c, e] : coefficient_exponent) terms_.push_back({e, mpz_class(c)});
  normalize(terms_);
}

LaurentPolynomial LaurentPolynomial::monomial(const mpz_class& coefficient, int exponent) {
  if (coefficient == 0) return {};
  return LaurentPolynomial(std::vector<Term>{{exponent, coefficient}});
}

LaurentPolynomial LaurentPolynomial::from_terms(std::vector<Term> terms) {
  normalize(terms);
  return LaurentPolynomial(std::move(terms));
}

const LaurentPolynomial& LaurentPolynomial::loop_value() {
  static const LaurentPolynomial delta{{-1, -2}, {-1, 2}};
  return delta;
}

int LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.front().exponent;
}

int LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.back().exponent;
}

mpz_class LaurentPolynomial::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == exponent) return it->coefficient;
  return 0;
}

LaurentPolynomial LaurentPolynomial::shifted(int shift) const {
  LaurentPolynomial r = *this;
  for (auto& t : r.terms_) t.exponent += shift;
  return r;
}

LaurentPolynomial LaurentPolynomial::substitute_power(int factor) const {
  if (factor == 0) throw std::invalid_argument("substitute_power: factor 0");
  LaurentPolynomial r = *this;
  for (auto& t : r.terms_) t.exponent *= factor;
  if (factor < 0) std::reverse(r.terms_.begin(), r.terms_.end());
  return r;
}

LaurentPolynomial LaurentPolynomial::compress_exponents(int divisor) const {
  if (divisor == 0) throw std::invalid_argument("compress_exponents: divisor 0");
  LaurentPolynomial r = *this;
  for (auto& t : r.terms_) {
    if (t.exponent % divisor != 0)
      throw std::domain_error("compress_exponents: exponent " + std::to_string(t.exponent) +
                              " not divisible by " + std::to_string(divisor));
    t.exponent /= divisor;
  }
  if (divisor < 0) std::reverse(r.terms_.begin(), r.terms_.end());
  return r;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned exponent) const {
  LaurentPolynomial result(1);
  LaurentPolynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::divide_exact(const LaurentPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return {};
  const Term& lead = divisor.terms_.front();
  const int max_quotient_exp = max_exponent() - divisor.max_exponent();
  LaurentPolynomial rem = *this;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& low = rem.terms_.front();
    int qe = low.exponent - lead.exponent;
    if (qe > max_quotient_exp || !mpz_divisible_p(low.coefficient.get_mpz_t(),
                                                  lead.coefficient.get_mpz_t()))
      throw std::domain_error("polynomial division is not exact");
    mpz_class qc = low.coefficient / lead.coefficient;
    quotient.push_back({qe, qc});
    rem -= divisor.shifted(qe) * LaurentPolynomial(std::vector<Term>{{0, qc}});
  }
  return LaurentPolynomial(std::move(quotient));
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  if (other.is_zero()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->exponent < b->exponent)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exponent < a->exponent) {
      merged.push_back(*b++);
    } else {
      mpz_class s = a->coefficient + b->coefficient;
      if (s != 0) merged.push_back({a->exponent, std::move(s)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  return *this += -other;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  *this = *this * other;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  const int lo = lhs.min_exponent() + rhs.min_exponent();
  const int hi = lhs.max_exponent() + rhs.max_exponent();
  std::vector<mpz_class> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& a : lhs.terms_)
    for (const auto& b : rhs.terms_)
      mpz_addmul(dense[a.exponent + b.exponent - lo].get_mpz_t(), a.coefficient.get_mpz_t(),
                 b.coefficient.get_mpz_t());
  std::vector<LaurentPolynomial::Term> terms;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) terms.push_back({lo + static_cast<int>(i), std::move(dense[i])});
  return LaurentPolynomial(std::move(terms));
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

std::string LaurentPolynomial::to_string(std::string_view variable) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    if (first) {
      out += t.coefficient.get_str();
    } else {
      out += t.coefficient < 0 ? " - " : " + ";
      out += mpz_class(abs(t.coefficient)).get_str();
    }
    out += '*';
    out += variable;
    out += '^';
    out += std::to_string(t.exponent);
    first = false;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::string_view variable)
      : text_(text), var_(variable) {}

  LaurentPolynomial run() {
    std::vector<LaurentPolynomial::Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    for (;;) {
      terms.push_back(term(sign));
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      sign = c == '-' ? -1 : 1;
      ++pos_;
    }
    return LaurentPolynomial::from_terms(std::move(terms));
  }

 private:
  LaurentPolynomial::Term term(int sign) {
    skip_ws();
    mpz_class coef = 1;
    bool have_coef = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      coef = mpz_class(std::string(text_.substr(start, pos_ - start)));
      have_coef = true;
      skip_ws();
    }
    int exponent = 0;
    if (have_coef && !at_end() && peek() == '*') {
      ++pos_;
      skip_ws();
      expect_variable();
      exponent = power();
    } else if (!have_coef) {
      expect_variable();
      exponent = power();
    }
    return {exponent, sign * coef};
  }

  void expect_variable() {
    if (text_.substr(pos_, var_.size()) != var_) fail("expected variable " + std::string(var_));
    pos_ += var_.size();
  }

  int power() {
    skip_ws();
    if (at_end() || peek() != '^') return 1;
    ++pos_;
    skip_ws();
    bool neg = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos_;
    }
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected exponent");
    long e = std::stol(std::string(text_.substr(start, pos_ - start)));
    return static_cast<int>(neg ? -e : e);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial: " + what + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  std::string_view text_;
  std::string_view var_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial LaurentPolynomial::parse(std::string_view text, std::string_view variable) {
  std::size_t b = 0;
  while (b < text.size() && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  std::size_t e = text.size();
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  if (text.substr(b, e - b) == "0") return {};
  return PolyParser(text, variable).run();
}

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) {
  return os << p.to_string();
}

mpq_class evaluate(const LaurentPolynomial& p, long x) {
  if (x == 0) throw std::domain_error("evaluation of a Laurent polynomial at 0");
  mpq_class sum = 0;
  mpz_class base = x;
  for (const auto& t : p.terms()) {
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(),
               static_cast<unsigned long>(t.exponent < 0 ? -t.exponent : t.exponent));
    mpq_class v = t.exponent < 0 ? mpq_class(t.coefficient, power)
                                 : mpq_class(t.coefficient * power);
    v.canonicalize();
    sum += v;
  }
  return sum;
}

bool is_unit_monomial(const LaurentPolynomial& p) {
  return p.term_count() == 1 && abs(p.terms().front().coefficient) == 1;
}

}  // namespace knotsieve

#include <gtest/gtest.h>

#include "knotsieve/errors.hpp"
#include "knotsieve/polynomial.hpp"
#include "oracles.hpp"

using knotsieve::LaurentPolynomial;

namespace {

LaurentPolynomial A(int e) { return LaurentPolynomial::monomial(1, e); }

}  // namespace

TEST(Polynomial, AdditionExamples) {
  EXPECT_EQ((A(2) + 1) + (-A(2) + 3), LaurentPolynomial(4));
  LaurentPolynomial p{{3, -2}, {-1, 5}};
  EXPECT_EQ(p + LaurentPolynomial(), p);
  EXPECT_EQ(A(-3) + A(-3), LaurentPolynomial::monomial(2, -3));
}

TEST(Polynomial, MultiplicationExamples) {
  EXPECT_EQ((A(1) + A(-1)) * (A(1) - A(-1)), A(2) - A(-2));
  LaurentPolynomial p{{7, 4}, {-2, -9}};
  EXPECT_EQ(p * 1, p);
  LaurentPolynomial d = -A(2) - A(-2);
  EXPECT_EQ(d * d, A(4) + 2 + A(-4));
  EXPECT_EQ(d, LaurentPolynomial::loop_value());
}

TEST(Polynomial, EvaluateExamples) {
  LaurentPolynomial jt = -A(4) + A(3) + A(1);
  EXPECT_EQ(knotsieve::evaluate(jt, -1), -3);
  EXPECT_EQ(knotsieve::evaluate(LaurentPolynomial(1), -1), 1);
  LaurentPolynomial fig = A(2) - LaurentPolynomial::monomial(3, 1) + 1;
  EXPECT_EQ(knotsieve::evaluate(fig, -1), 5);
  EXPECT_EQ(knotsieve::evaluate(A(-2), 2), mpq_class(1, 4));
  EXPECT_THROW(knotsieve::evaluate(A(1), 0), std::domain_error);
}

TEST(Polynomial, UnitMonomial) {
  EXPECT_TRUE(knotsieve::is_unit_monomial(-A(9)));
  EXPECT_FALSE(knotsieve::is_unit_monomial(A(-7) - A(-3) - A(5)));
  EXPECT_FALSE(knotsieve::is_unit_monomial(LaurentPolynomial()));
  EXPECT_FALSE(knotsieve::is_unit_monomial(LaurentPolynomial::monomial(2, 3)));
}

TEST(Polynomial, TextRoundTrip) {
  LaurentPolynomial p = A(-7) - A(-3) - LaurentPolynomial::monomial(12, 5);
  EXPECT_EQ(p.to_string(), "1*A^-7 - 1*A^-3 - 12*A^5");
  EXPECT_EQ(LaurentPolynomial::parse(p.to_string()), p);
  EXPECT_EQ(LaurentPolynomial().to_string(), "0");
  EXPECT_EQ(LaurentPolynomial::parse("0"), LaurentPolynomial());
  EXPECT_EQ(LaurentPolynomial::parse("-1*t^-4 + 1*t^-3", "t"), -A(-4) + A(-3));
  EXPECT_THROW(LaurentPolynomial::parse("1*A^"), knotsieve::ParseError);
  EXPECT_THROW(LaurentPolynomial::parse("2*B^1"), knotsieve::ParseError);
}

TEST(Polynomial, BigCoefficientsDoNotOverflow) {
  LaurentPolynomial p = LaurentPolynomial::monomial(mpz_class("9223372036854775807"), 1) + 1;
  LaurentPolynomial sq = p * p;
  EXPECT_EQ(sq.coefficient(2), mpz_class("85070591730234615847396907784232501249"));
  EXPECT_EQ(LaurentPolynomial::parse(sq.to_string()), sq);
}

TEST(PolynomialProperty, MatchesNaiveTermArithmetic) {
  oracle::Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    auto p = oracle::random_polynomial(rng), q = oracle::random_polynomial(rng);
    EXPECT_EQ(oracle::terms_of(p + q), oracle::naive_add(oracle::terms_of(p), oracle::terms_of(q)));
    EXPECT_EQ(oracle::terms_of(p * q), oracle::naive_mul(oracle::terms_of(p), oracle::terms_of(q)));
  }
}

TEST(PolynomialProperty, RingAxioms) {
  oracle::Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    auto p = oracle::random_polynomial(rng), q = oracle::random_polynomial(rng), r = oracle::random_polynomial(rng);
    EXPECT_EQ(p + q, q + p);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p + q) + r, p + (q + r));
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_TRUE((p + (-p)).is_zero());
    EXPECT_EQ(p - q, p + (-q));
  }
}

TEST(PolynomialProperty, NormalFormHasNoZeroCoefficients) {
  oracle::Rng rng(13);
  for (int i = 0; i < 300; ++i) {
    auto p = oracle::random_polynomial(rng, 8, 4, 2), q = oracle::random_polynomial(rng, 8, 4, 2);
    for (const auto& x : {p + q, p - q, p * q, p - p}) {
      int prev = 0;
      bool first = true;
      for (const auto& t : x.terms()) {
        EXPECT_NE(t.coefficient, 0);
        if (!first) EXPECT_LT(prev, t.exponent);
        prev = t.exponent;
        first = false;
      }
    }
  }
}

TEST(PolynomialProperty, EvaluationIsMultiplicativeAtUnits) {
  oracle::Rng rng(14);
  for (int i = 0; i < 300; ++i) {
    auto p = oracle::random_polynomial(rng), q = oracle::random_polynomial(rng);
    for (long x : {1L, -1L, 2L, -3L})
      EXPECT_EQ(knotsieve::evaluate(p * q, x), knotsieve::evaluate(p, x) * knotsieve::evaluate(q, x));
  }
}

TEST(PolynomialProperty, ExactDivisionAndSubstitution) {
  oracle::Rng rng(15);
  for (int i = 0; i < 200; ++i) {
    auto p = oracle::random_polynomial(rng), q = oracle::random_polynomial(rng);
    if (q.is_zero()) continue;
    EXPECT_EQ((p * q).divide_exact(q), p);
    EXPECT_EQ(p.substitute_power(-4).compress_exponents(-4), p);
    EXPECT_EQ(p.shifted(5).shifted(-5), p);
  }
  EXPECT_THROW((A(1) + 1).divide_exact(A(1) + 2), std::domain_error);
}

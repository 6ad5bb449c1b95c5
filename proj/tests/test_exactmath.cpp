#include <gtest/gtest.h>

#include <random>

#include "bstab/exactmath.hpp"

using bstab::BigInteger;
using bstab::IntPolynomial;
using bstab::Rational;

TEST(BigInteger, ParseAndPrint) {
    EXPECT_EQ(BigInteger::parse("-123456789012345678901234567890").to_string(), "-123456789012345678901234567890");
    EXPECT_EQ(BigInteger(0).to_string(), "0");
    EXPECT_THROW(BigInteger::parse("12x"), std::invalid_argument);
}

TEST(BigInteger, ArithmeticAndDivisionByZero) {
    BigInteger a = BigInteger::parse("100000000000000000000");
    EXPECT_EQ((a * a / a), a);
    EXPECT_EQ(BigInteger(-7) / BigInteger(2), BigInteger(-3));
    EXPECT_EQ(BigInteger(-7) % BigInteger(2), BigInteger(-1));
    EXPECT_THROW(a / BigInteger(0), std::domain_error);
    EXPECT_TRUE(BigInteger(3) > BigInteger(-4));
}

TEST(Factorial, SmallValues) {
    EXPECT_EQ(bstab::factorial(0), BigInteger(1));
    EXPECT_EQ(bstab::factorial(6), BigInteger(720));
    EXPECT_EQ(bstab::factorial(3), BigInteger(6));
    EXPECT_EQ(bstab::factorial(20).to_string(), "2432902008176640000");
}

TEST(Binomial, Examples) {
    EXPECT_EQ(bstab::binomial(4, 2), BigInteger(6));
    EXPECT_EQ(bstab::binomial(2, 2), BigInteger(1));
    EXPECT_EQ(bstab::binomial(3, -1), BigInteger(0));
    EXPECT_EQ(bstab::binomial(3, 4), BigInteger(0));
    EXPECT_EQ(bstab::factorial(bstab::binomial(3, 2).to_long()), BigInteger(6));
    EXPECT_THROW(bstab::binomial(-1, 0), std::invalid_argument);
}

TEST(Binomial, PascalRule) {
    for (long n = 1; n <= 40; ++n) {
        for (long r = 0; r <= n; ++r) {
            EXPECT_EQ(bstab::binomial(n, r), bstab::binomial(n - 1, r - 1) + bstab::binomial(n - 1, r));
        }
    }
}

TEST(Rational, NormalizesEagerly) {
    Rational q(BigInteger(6), BigInteger(-4));
    EXPECT_EQ(q.to_string(), "-3/2");
    EXPECT_EQ(Rational(BigInteger(5)).to_string(), "5/1");
    EXPECT_EQ(Rational(BigInteger(0), BigInteger(-9)).to_string(), "0/1");
    EXPECT_THROW(Rational(BigInteger(1), BigInteger(0)), std::domain_error);
}

TEST(Rational, FieldAxiomsOnRandomValues) {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 30);
    for (int trial = 0; trial < 300; ++trial) {
        Rational a(BigInteger(num(rng)), BigInteger(den(rng)));
        Rational b(BigInteger(num(rng)), BigInteger(den(rng)));
        Rational c(BigInteger(num(rng)), BigInteger(den(rng)));
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, Rational(BigInteger(0)));
        if (b.sign() != 0) {
            EXPECT_EQ((a / b) * b, a);
        }
    }
}

namespace {
IntPolynomial lin(long c) { return IntPolynomial::linear(BigInteger(1), BigInteger(c)); }
}  // namespace

TEST(IntPolynomial, AddExamples) {
    EXPECT_EQ((lin(1) + lin(2)).to_string(), "2x+3");
    EXPECT_EQ(lin(1) + IntPolynomial(), lin(1));
    IntPolynomial sq = IntPolynomial::x() * IntPolynomial::x();
    EXPECT_EQ((sq + (-sq)).to_string(), "0");
    EXPECT_EQ((sq - sq).degree(), -1);
}

TEST(IntPolynomial, MultiplyExamples) {
    EXPECT_EQ((lin(1) * lin(2)).to_string(), "x^2+3x+2");
    IntPolynomial p = lin(1) * lin(2) * IntPolynomial::linear(BigInteger(2), BigInteger(3));
    EXPECT_EQ(p.to_string(), "2x^3+9x^2+13x+6");
    EXPECT_EQ(p * IntPolynomial(BigInteger(1)), p);
}

TEST(IntPolynomial, EvaluateExamples) {
    EXPECT_EQ(lin(1).evaluate(BigInteger(0)), BigInteger(1));
    IntPolynomial p = IntPolynomial(std::vector<BigInteger>{6, 13, 9, 2});
    EXPECT_EQ(p.evaluate(BigInteger(1)), BigInteger(30));
    EXPECT_EQ(IntPolynomial().evaluate(BigInteger(7)), BigInteger(0));
}

TEST(IntPolynomial, ExactScalarDivision) {
    IntPolynomial p = IntPolynomial::linear(BigInteger(4), BigInteger(6)) * lin(1);
    EXPECT_EQ(p.content(), BigInteger(2));
    EXPECT_EQ(p.divide_exact(BigInteger(2)), IntPolynomial::linear(BigInteger(2), BigInteger(3)) * lin(1));
    EXPECT_THROW(p.divide_exact(BigInteger(4)), std::domain_error);
}

TEST(IntPolynomial, RingLawsAndEvaluationHomomorphism) {
    std::mt19937 rng(777);
    std::uniform_int_distribution<long> coef(-9, 9);
    std::uniform_int_distribution<int> deg(0, 5);
    auto random_poly = [&] {
        std::vector<BigInteger> c;
        for (int d = deg(rng); d >= 0; --d) c.emplace_back(coef(rng));
        return IntPolynomial(c);
    };
    for (int trial = 0; trial < 200; ++trial) {
        IntPolynomial p = random_poly();
        IntPolynomial q = random_poly();
        IntPolynomial r = random_poly();
        EXPECT_EQ(p * (q + r), p * q + p * r);
        EXPECT_EQ(p * q, q * p);
        const BigInteger x(coef(rng));
        EXPECT_EQ((p * q).evaluate(x), p.evaluate(x) * q.evaluate(x));
        EXPECT_EQ((p + q).evaluate(x), p.evaluate(x) + q.evaluate(x));
        if (!p.is_zero() && !q.is_zero()) {
            EXPECT_EQ((p * q).degree(), p.degree() + q.degree());
        }
    }
}

#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace bstab {

/// Arbitrary-precision signed integer. Thin value wrapper over GMP.
class BigInteger {
public:
    BigInteger() = default;
    BigInteger(long value) : value_(value) {}
    BigInteger(int value) : value_(static_cast<long>(value)) {}
    explicit BigInteger(mpz_class value) : value_(std::move(value)) {}

    /// Parses an optionally signed decimal string; throws std::invalid_argument.
    static BigInteger parse(std::string_view text);

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    BigInteger abs() const;
    bool fits_long() const { return value_.fits_slong_p(); }
    long to_long() const;
    std::string to_string() const { return value_.get_str(); }
    const mpz_class& raw() const { return value_; }

    BigInteger& operator+=(const BigInteger& o) { value_ += o.value_; return *this; }
    BigInteger& operator-=(const BigInteger& o) { value_ -= o.value_; return *this; }
    BigInteger& operator*=(const BigInteger& o) { value_ *= o.value_; return *this; }
    /// Truncating division; throws std::domain_error on a zero divisor.
    BigInteger& operator/=(const BigInteger& o);
    BigInteger& operator%=(const BigInteger& o);

    friend BigInteger operator+(BigInteger a, const BigInteger& b) { return a += b; }
    friend BigInteger operator-(BigInteger a, const BigInteger& b) { return a -= b; }
    friend BigInteger operator*(BigInteger a, const BigInteger& b) { return a *= b; }
    friend BigInteger operator/(BigInteger a, const BigInteger& b) { return a /= b; }
    friend BigInteger operator%(BigInteger a, const BigInteger& b) { return a %= b; }
    BigInteger operator-() const { return BigInteger(mpz_class(-value_)); }

    friend bool operator==(const BigInteger& a, const BigInteger& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const BigInteger& a, const BigInteger& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

    friend BigInteger gcd(const BigInteger& a, const BigInteger& b);
    friend std::ostream& operator<<(std::ostream& os, const BigInteger& v) { return os << v.to_string(); }

private:
    mpz_class value_;
};

BigInteger factorial(long n);

/// Exact binomial coefficient; 0 when r < 0 or r > n. Throws on n < 0.
BigInteger binomial(long n, long r);

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInteger numerator) : num_(std::move(numerator)), den_(1) {}
    Rational(long numerator) : num_(numerator), den_(1) {}
    Rational(int numerator) : num_(numerator), den_(1) {}
    /// Throws std::domain_error when the denominator is zero.
    Rational(BigInteger numerator, BigInteger denominator);

    const BigInteger& numerator() const { return num_; }
    const BigInteger& denominator() const { return den_; }
    bool is_integer() const { return den_ == BigInteger(1); }
    int sign() const { return num_.sign(); }

    /// Always "p/q", including integers ("1/1").
    std::string to_string() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(-num_, den_); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

private:
    void normalize();

    BigInteger num_;
    BigInteger den_;
};

/// Dense univariate polynomial in x with BigInteger coefficients.
/// coefficients()[d] is the coefficient of x^d; the highest stored
/// coefficient is nonzero, so the zero polynomial stores nothing.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(BigInteger constant);
    IntPolynomial(long constant) : IntPolynomial(BigInteger(constant)) {}
    IntPolynomial(int constant) : IntPolynomial(BigInteger(constant)) {}
    explicit IntPolynomial(std::vector<BigInteger> coefficients);

    /// slope*x + intercept
    static IntPolynomial linear(const BigInteger& slope, const BigInteger& intercept);
    static IntPolynomial x() { return linear(1, 0); }

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInteger>& coefficients() const { return coeffs_; }
    BigInteger coefficient(std::size_t d) const;
    BigInteger leading_coefficient() const;
    /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    BigInteger content() const;

    /// Horner evaluation.
    BigInteger evaluate(const BigInteger& at) const;

    /// Divides every coefficient by d; throws std::domain_error unless exact.
    IntPolynomial divide_exact(const BigInteger& d) const;

    /// e.g. "2x^3+9x^2+13x+6"; zero prints as "0".
    std::string to_string() const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial& operator*=(const IntPolynomial& o);
    IntPolynomial& operator*=(const BigInteger& s);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(IntPolynomial a, const BigInteger& s) { return a *= s; }
    IntPolynomial operator-() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
    friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

private:
    void trim();

    std::vector<BigInteger> coeffs_;
};

}  // namespace bstab

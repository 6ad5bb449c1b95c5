#include "bstab/exactmath.hpp"

#include <sstream>
#include <stdexcept>

namespace bstab {

BigInteger BigInteger::parse(std::string_view text) {
    std::string s(text);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start) {
        throw std::invalid_argument("empty integer literal");
    }
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
            throw std::invalid_argument("malformed integer literal: " + s);
        }
    }
    if (s[0] == '+') {
        s.erase(0, 1);
    }
    return BigInteger(mpz_class(s, 10));
}

BigInteger BigInteger::abs() const {
    mpz_class r;
    mpz_abs(r.get_mpz_t(), value_.get_mpz_t());
    return BigInteger(std::move(r));
}

long BigInteger::to_long() const {
    if (!fits_long()) {
        throw std::overflow_error("integer does not fit in a machine word: " + to_string());
    }
    return value_.get_si();
}

BigInteger& BigInteger::operator/=(const BigInteger& o) {
    if (o.is_zero()) {
        throw std::domain_error("division by zero");
    }
    mpz_tdiv_q(value_.get_mpz_t(), value_.get_mpz_t(), o.value_.get_mpz_t());
    return *this;
}

BigInteger& BigInteger::operator%=(const BigInteger& o) {
    if (o.is_zero()) {
        throw std::domain_error("division by zero");
    }
    mpz_tdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), o.value_.get_mpz_t());
    return *this;
}

BigInteger gcd(const BigInteger& a, const BigInteger& b) {
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
    return BigInteger(std::move(r));
}

BigInteger factorial(long n) {
    if (n < 0) {
        throw std::invalid_argument("factorial of a negative number");
    }
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return BigInteger(std::move(r));
}

BigInteger binomial(long n, long r) {
    if (n < 0) {
        throw std::invalid_argument("binomial: negative n");
    }
    if (r < 0 || r > n) {
        return 0;
    }
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return BigInteger(std::move(out));
}

// ---- Rational ---------------------------------------------------------

Rational::Rational(BigInteger numerator, BigInteger denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) {
        throw std::domain_error("rational with zero denominator");
    }
    normalize();
}

void Rational::normalize() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInteger g = gcd(num_, den_);
    if (!(g == BigInteger(1))) {
        num_ /= g;
        den_ /= g;
    }
}

std::string Rational::to_string() const {
    return num_.to_string() + "/" + den_.to_string();
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

// ---- IntPolynomial ----------------------------------------------------

IntPolynomial::IntPolynomial(BigInteger constant) {
    if (!constant.is_zero()) {
        coeffs_.push_back(std::move(constant));
    }
}

IntPolynomial::IntPolynomial(std::vector<BigInteger> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

IntPolynomial IntPolynomial::linear(const BigInteger& slope, const BigInteger& intercept) {
    return IntPolynomial(std::vector<BigInteger>{intercept, slope});
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

BigInteger IntPolynomial::coefficient(std::size_t d) const {
    return d < coeffs_.size() ? coeffs_[d] : BigInteger(0);
}

BigInteger IntPolynomial::leading_coefficient() const {
    return coeffs_.empty() ? BigInteger(0) : coeffs_.back();
}

BigInteger IntPolynomial::content() const {
    BigInteger g(0);
    for (const auto& c : coeffs_) {
        g = gcd(g, c);
    }
    return g;
}

BigInteger IntPolynomial::evaluate(const BigInteger& at) const {
    BigInteger acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

IntPolynomial IntPolynomial::divide_exact(const BigInteger& d) const {
    if (d.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    std::vector<BigInteger> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        if (!(c % d).is_zero()) {
            throw std::domain_error("polynomial " + to_string() + " not divisible by " + d.to_string());
        }
        out.push_back(c / d);
    }
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const BigInteger& c = coeffs_[static_cast<std::size_t>(d)];
        if (c.is_zero()) {
            continue;
        }
        BigInteger mag = c.abs();
        if (c.sign() < 0) {
            os << '-';
        } else if (!first) {
            os << '+';
        }
        first = false;
        bool unit = mag == BigInteger(1);
        if (d == 0 || !unit) {
            os << mag;
        }
        if (d >= 1) {
            os << 'x';
        }
        if (d >= 2) {
            os << '^' << d;
        }
    }
    return os.str();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<BigInteger> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
    *this = *this * o;
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInteger& s) {
    for (auto& c : coeffs_) {
        c *= s;
    }
    trim();
    return *this;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

}  // namespace bstab

#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "jcd/errors.hpp"

namespace jcd {

// Arbitrary-precision rational number, always kept in lowest terms with a
// positive denominator. Thin wrapper over GMP's mpq_class; the wrapper exists
// to pin down construction, parsing and formatting, not to hide GMP.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}            // NOLINT: implicit by design
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& q);

    // Strict literal grammar: optional '-', digits, optional '/' digits.
    // No whitespace, no '+', no empty parts, denominator nonzero.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c <=> 0;
    }

    Rational inverse() const;
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    // "n" when the denominator is 1, otherwise "n/d"; '-' binds to the whole
    // value ("-2/3"), never to the denominator.
    std::string to_string() const;

private:
    mpq_class v_;
};

std::string to_string(const Rational& r);

} // namespace jcd

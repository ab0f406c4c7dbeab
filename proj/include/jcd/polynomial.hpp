#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "jcd/rational.hpp"

namespace jcd {

// Dense univariate polynomial over the rationals, coefficients stored lowest
// degree first with no trailing zeros. The zero polynomial is the empty
// coefficient vector and has no degree (degree() is empty).
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coeffs)
        : c_(coeffs) { trim(); }
    explicit Polynomial(std::vector<Rational> coeffs)
        : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const Rational& c) { return Polynomial{c}; }
    static Polynomial x() { return Polynomial{0, 1}; }

    std::optional<int> degree() const {
        if (c_.empty())
            return std::nullopt;
        return static_cast<int>(c_.size()) - 1;
    }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    // Coefficient of x^i; zero outside the stored range.
    const Rational& operator[](std::size_t i) const {
        static const Rational zero;
        return i < c_.size() ? c_[i] : zero;
    }
    const Rational& leading() const;
    std::span<const Rational> coefficients() const { return c_; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& p);

    bool operator==(const Polynomial& o) const = default;

    Rational operator()(const Rational& x) const; // Horner

    Polynomial derivative() const;
    Polynomial monic() const; // requires nonzero

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }
    std::vector<Rational> c_;
};

// Euclidean division: a = q*b + r with r zero or deg r < deg b. Division by
// the zero polynomial throws precondition_error.
std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b);

Polynomial pow(const Polynomial& base, int exponent);

// Monic gcd; gcd(0,0) is rejected. gcd(a,0) = monic a.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// g = u*a + v*b with g the monic gcd and, when both quotients are
// nonconstant, deg u < deg(b/g) and deg v < deg(a/g). This canonical choice
// makes the cofactors unique.
struct ExtendedGcd {
    Polynomial g, u, v;
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

// Splits p (nonconstant) into its squarefree part and the cofactor:
//   p_tilde = p / gcd(p, p') (monic "radical": same roots, multiplicity one),
//   p_bar   = p / p_tilde,
//   multiplicity = largest root multiplicity of p, found by the gcd chain
//   t := p; repeat t := t / gcd(t, p_tilde) until t is constant.
struct SeparablePart {
    Polynomial p_tilde;
    Polynomial p_bar;
    int multiplicity = 0;
};
SeparablePart separable_part(const Polynomial& p);

// Inverse of a modulo m (nonconstant m), i.e. the unique r with
// r*a = 1 (mod m) and deg r < deg m. Throws not_coprime_error when
// gcd(a, m) is nonconstant.
Polynomial mod_inverse(const Polynomial& a, const Polynomial& m);

// f(g) reduced modulo m, evaluated by Horner with a reduction after every
// step so intermediate degrees stay below deg m.
Polynomial compose_mod(const Polynomial& f, const Polynomial& g, const Polynomial& m);

} // namespace jcd

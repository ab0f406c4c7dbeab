#include "jcd/polynomial.hpp"

#include <algorithm>

namespace jcd {

const Rational& Polynomial::leading() const {
    if (c_.empty())
        throw precondition_error("polynomial: leading coefficient of zero");
    return c_.back();
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        r[i] = -c_[i];
    return Polynomial(std::move(r));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
    if (s.is_zero())
        return {};
    std::vector<Rational> r(p.c_.begin(), p.c_.end());
    for (auto& c : r)
        c *= s;
    return Polynomial(std::move(r));
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1)
        return {};
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::monic() const {
    if (is_zero())
        throw precondition_error("polynomial: monic of zero");
    return leading().inverse() * *this;
}

std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero())
        throw precondition_error("polynomial: division by zero polynomial");
    if (a.is_zero() || *a.degree() < *b.degree())
        return {Polynomial{}, a};
    int dq = *a.degree() - *b.degree();
    std::vector<Rational> q(static_cast<std::size_t>(dq) + 1);
    std::vector<Rational> r(a.coefficients().begin(), a.coefficients().end());
    Rational lead_inv = b.leading().inverse();
    for (int k = dq; k >= 0; --k) {
        Rational c = r[static_cast<std::size_t>(k + *b.degree())] * lead_inv;
        if (c.is_zero())
            continue;
        q[static_cast<std::size_t>(k)] = c;
        for (int i = 0; i <= *b.degree(); ++i)
            r[static_cast<std::size_t>(k + i)] -= c * b[static_cast<std::size_t>(i)];
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial pow(const Polynomial& base, int exponent) {
    if (exponent < 0)
        throw precondition_error("polynomial: negative exponent");
    Polynomial result{1};
    Polynomial b = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1)
            result = result * b;
        e >>= 1;
        if (e)
            b = b * b;
    }
    return result;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero())
        throw precondition_error("polynomial: gcd(0, 0)");
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = divrem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero())
        throw precondition_error("polynomial: extended_gcd(0, 0)");
    // Standard extended Euclid on (a, b), then normalize to the canonical
    // representative: g monic, u reduced modulo b/g, v recomputed exactly.
    Polynomial r0 = a, r1 = b;
    Polynomial u0{1}, u1{};
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        Polynomial u2 = u0 - q * u1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    Rational scale = r0.leading().inverse();
    Polynomial g = scale * r0;
    Polynomial u = scale * u0;
    if (!b.is_zero()) {
        Polynomial bg = divrem(b, g).first;
        if (!bg.is_constant())
            u = divrem(u, bg).second;
        else
            u = {};
        // v = (g - u*a) / b, exact by construction.
        Polynomial v = divrem(g - u * a, b).first;
        return {std::move(g), std::move(u), std::move(v)};
    }
    return {std::move(g), std::move(u), Polynomial{}};
}

SeparablePart separable_part(const Polynomial& p) {
    if (p.is_constant())
        throw precondition_error("polynomial: separable part of a constant");
    Polynomial pm = p.monic();
    Polynomial g = gcd(pm, pm.derivative());
    SeparablePart out;
    out.p_tilde = divrem(pm, g).first.monic();
    out.p_bar = divrem(pm, out.p_tilde).first;
    // Largest multiplicity: strip one layer of roots per pass. Each division
    // by gcd(t, p_tilde) removes one from every remaining root's multiplicity,
    // so the pass count is the maximum.
    Polynomial t = pm;
    int m = 0;
    while (!t.is_constant()) {
        t = divrem(t, gcd(t, out.p_tilde)).first;
        ++m;
    }
    out.multiplicity = m;
    return out;
}

Polynomial mod_inverse(const Polynomial& a, const Polynomial& m) {
    if (m.is_constant())
        throw precondition_error("polynomial: modulus must be nonconstant");
    Polynomial ar = divrem(a, m).second;
    if (ar.is_zero())
        throw not_coprime_error("polynomial: no inverse, residue is zero mod modulus");
    ExtendedGcd e = extended_gcd(ar, m);
    if (!e.g.is_constant())
        throw not_coprime_error("polynomial: no inverse, gcd with modulus is nonconstant");
    // g is monic and constant, hence 1, so u*ar = 1 (mod m) already.
    return divrem(e.u, m).second;
}

Polynomial compose_mod(const Polynomial& f, const Polynomial& g, const Polynomial& m) {
    if (m.is_constant())
        throw precondition_error("polynomial: modulus must be nonconstant");
    Polynomial gr = divrem(g, m).second;
    Polynomial acc;
    auto coeffs = f.coefficients();
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        acc = acc * gr + Polynomial::constant(coeffs[i]);
        acc = divrem(acc, m).second;
    }
    return acc;
}

} // namespace jcd

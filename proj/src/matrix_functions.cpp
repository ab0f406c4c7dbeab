#include "jcd/matrix_functions.hpp"

#include <algorithm>

namespace jcd {

PolyMatrix::PolyMatrix(std::size_t n) : n_(n), e_(n * n) {
    if (n == 0)
        throw dimension_error("matrix: dimension must be at least 1");
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
    PolyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Polynomial{1};
    return m;
}

SquareMatrix PolyMatrix::operator()(const Rational& t) const {
    SquareMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            r.at(i, j) = at(i, j)(t);
    return r;
}

SquareMatrix PolyMatrix::coefficient(int k) const {
    SquareMatrix r(n_);
    if (k < 0)
        return r;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            r.at(i, j) = at(i, j)[static_cast<std::size_t>(k)];
    return r;
}

std::optional<int> PolyMatrix::max_degree() const {
    std::optional<int> d;
    for (const auto& p : e_)
        if (auto dp = p.degree())
            d = d ? std::max(*d, *dp) : *dp;
    return d;
}

PolyMatrix PolyMatrix::derivative() const {
    PolyMatrix r(n_);
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = e_[i].derivative();
    return r;
}

PolyMatrix operator*(const SquareMatrix& a, const PolyMatrix& b) {
    if (a.dim() != b.dim())
        throw dimension_error("matrix: dimension mismatch");
    std::size_t n = a.dim();
    PolyMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a.at(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j)
                r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.n_ != b.n_)
        throw dimension_error("matrix: dimension mismatch");
    std::size_t n = a.n_;
    PolyMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a.at(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j)
                r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

Rational binomial(long long m, int j) {
    if (j < 0)
        throw precondition_error("binomial: negative lower index");
    if (m >= 0 && j > m)
        return 0;
    mpz_class num(1), den(1);
    mpz_class top(static_cast<long>(m));
    for (int i = 0; i < j; ++i) {
        num *= top - i;
        den *= i + 1;
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return Rational(q, mpz_class(1));
}

namespace {

SquareMatrix power_by_squaring(const SquareMatrix& base, long long e) {
    SquareMatrix result = SquareMatrix::identity(base.dim());
    SquareMatrix b = base;
    while (e > 0) {
        if (e & 1)
            result = result * b;
        e >>= 1;
        if (e)
            b = b * b;
    }
    return result;
}

} // namespace

SquareMatrix matrix_power(const Decomposition& dec, long long m) {
    if (m < 0)
        throw precondition_error("matrix_power: exponent must be nonnegative");
    std::size_t n = dec.d.dim();
    if (m == 0)
        return SquareMatrix::identity(n);
    auto index = nilpotency_index(dec.n);
    if (!index)
        throw not_nilpotent_error("matrix_power: decomposition has non-nilpotent n");
    // Terms j = 0 .. min(index-1, m): C(m, j) D^(m-j) N^j. N^index = 0 kills
    // everything beyond, which is what makes huge exponents affordable.
    int jmax = static_cast<int>(std::min<long long>(*index - 1, m));
    SquareMatrix acc(n);
    SquareMatrix npow = SquareMatrix::identity(n);
    for (int j = 0; j <= jmax; ++j) {
        if (j > 0)
            npow = npow * dec.n;
        SquareMatrix term = power_by_squaring(dec.d, m - j) * npow;
        acc += binomial(m, j) * term;
    }
    return acc;
}

SquareMatrix matrix_power(const SquareMatrix& u, long long m) {
    if (m < 0)
        throw precondition_error("matrix_power: exponent must be nonnegative");
    if (m == 0)
        return SquareMatrix::identity(u.dim());
    return matrix_power(jordan_chevalley(u), m);
}

PolyMatrix exp_nilpotent_factor(const SquareMatrix& n) {
    auto index = nilpotency_index(n);
    if (!index)
        throw not_nilpotent_error("exp_nilpotent_factor: matrix is not nilpotent");
    std::size_t dim = n.dim();
    PolyMatrix e(dim);
    SquareMatrix npow = SquareMatrix::identity(dim);
    Rational factorial(1);
    for (int j = 0; j < *index; ++j) {
        if (j > 0) {
            npow = npow * n;
            factorial *= Rational(j);
        }
        Rational inv = factorial.inverse();
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t l = 0; l < dim; ++l) {
                const Rational& c = npow.at(i, l);
                if (c.is_zero())
                    continue;
                std::vector<Rational> coeffs(static_cast<std::size_t>(j) + 1);
                coeffs.back() = c * inv;
                e.at(i, l) += Polynomial(std::move(coeffs));
            }
    }
    return e;
}

} // namespace jcd

#include "jcd/matrix.hpp"

#include <utility>

namespace jcd {

SquareMatrix::SquareMatrix(std::size_t n) : n_(n), e_(n * n) {
    if (n == 0)
        throw dimension_error("matrix: dimension must be at least 1");
}

SquareMatrix::SquareMatrix(std::size_t n, std::vector<Rational> entries)
    : n_(n), e_(std::move(entries)) {
    if (n == 0)
        throw dimension_error("matrix: dimension must be at least 1");
    if (e_.size() != n * n)
        throw dimension_error("matrix: entry count does not match dimension");
}

SquareMatrix SquareMatrix::identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

SquareMatrix SquareMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    std::size_t n = rows.size();
    if (n == 0)
        throw dimension_error("matrix: dimension must be at least 1");
    std::vector<Rational> flat;
    flat.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n)
            throw dimension_error("matrix: ragged rows, matrix must be square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return SquareMatrix(n, std::move(flat));
}

void SquareMatrix::check_same_dim(const SquareMatrix& o) const {
    if (n_ != o.n_)
        throw dimension_error("matrix: dimension mismatch");
}

bool SquareMatrix::is_zero() const {
    for (const auto& e : e_)
        if (!e.is_zero())
            return false;
    return true;
}

bool SquareMatrix::is_identity() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (at(i, j) != Rational(i == j ? 1 : 0))
                return false;
    return true;
}

SquareMatrix SquareMatrix::operator-() const {
    SquareMatrix r(n_);
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = -e_[i];
    return r;
}

SquareMatrix& SquareMatrix::operator+=(const SquareMatrix& o) {
    check_same_dim(o);
    for (std::size_t i = 0; i < e_.size(); ++i)
        e_[i] += o.e_[i];
    return *this;
}

SquareMatrix& SquareMatrix::operator-=(const SquareMatrix& o) {
    check_same_dim(o);
    for (std::size_t i = 0; i < e_.size(); ++i)
        e_[i] -= o.e_[i];
    return *this;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    a.check_same_dim(b);
    std::size_t n = a.n_;
    SquareMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j)
                r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

SquareMatrix operator*(const Rational& s, SquareMatrix m) {
    for (auto& e : m.e_)
        e *= s;
    return m;
}

Rational SquareMatrix::trace() const {
    Rational t;
    for (std::size_t i = 0; i < n_; ++i)
        t += at(i, i);
    return t;
}

SquareMatrix inverse(const SquareMatrix& m) {
    std::size_t n = m.dim();
    SquareMatrix a = m;
    SquareMatrix inv = SquareMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a.at(pivot, col).is_zero())
            ++pivot;
        if (pivot == n)
            throw singular_matrix_error("matrix: singular, no inverse");
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Rational d = a.at(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) *= d;
            inv.at(col, j) *= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col)
                continue;
            Rational f = a.at(i, col);
            if (f.is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

Polynomial char_poly(const SquareMatrix& m) {
    // Faddeev-LeVerrier: M_1 = M, c_{n-1} = -tr M_1, then
    //   M_k = M (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k) / k.
    // det(xI - M) = x^n + c_{n-1} x^{n-1} + ... + c_0, all steps exact.
    std::size_t n = m.dim();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    SquareMatrix mk = m;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            SquareMatrix t = mk;
            for (std::size_t i = 0; i < n; ++i)
                t.at(i, i) += c[n - k + 1];
            mk = m * t;
        }
        c[n - k] = -(mk.trace() / Rational(static_cast<long>(k)));
    }
    return Polynomial(std::move(c));
}

SquareMatrix eval_at(const Polynomial& p, const SquareMatrix& m) {
    std::size_t n = m.dim();
    SquareMatrix acc(n);
    auto coeffs = p.coefficients();
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        acc = acc * m;
        for (std::size_t d = 0; d < n; ++d)
            acc.at(d, d) += coeffs[i];
    }
    return acc;
}

std::optional<int> nilpotency_index(const SquareMatrix& m) {
    if (m.is_zero())
        return 1;
    SquareMatrix p = m;
    for (std::size_t k = 1; k < m.dim(); ++k) {
        p = p * m;
        if (p.is_zero())
            return static_cast<int>(k) + 1;
    }
    return std::nullopt;
}

} // namespace jcd

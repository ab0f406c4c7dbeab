#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "jcd/polynomial.hpp"
#include "jcd/rational.hpp"

namespace jcd {

// Dense square matrix of rationals, row-major. Dimension is fixed at
// construction and must be at least 1.
class SquareMatrix {
public:
    explicit SquareMatrix(std::size_t n);
    SquareMatrix(std::size_t n, std::vector<Rational> entries);
    static SquareMatrix identity(std::size_t n);
    static SquareMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t dim() const { return n_; }
    Rational& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    bool is_zero() const;
    bool is_identity() const;

    SquareMatrix operator-() const;
    SquareMatrix& operator+=(const SquareMatrix& o);
    SquareMatrix& operator-=(const SquareMatrix& o);
    friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
    friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
    friend SquareMatrix operator*(const Rational& s, SquareMatrix m);

    bool operator==(const SquareMatrix& o) const = default;

    Rational trace() const;

private:
    void check_same_dim(const SquareMatrix& o) const;
    std::size_t n_;
    std::vector<Rational> e_;
};

// Exact Gauss-Jordan with partial pivoting on the first nonzero entry.
// Throws singular_matrix_error when no pivot exists in some column.
SquareMatrix inverse(const SquareMatrix& m);

// Characteristic polynomial det(xI - M), monic of degree n, computed by the
// Faddeev-LeVerrier recurrence (exact; the only divisions are by 1..n).
Polynomial char_poly(const SquareMatrix& m);

// p(M) by Horner, n x n for the dimension of M.
SquareMatrix eval_at(const Polynomial& p, const SquareMatrix& m);

// Smallest k with M^k = 0, or empty if M is not nilpotent (no power up to
// M^n vanishes; higher powers cannot help). The zero matrix has index 1.
std::optional<int> nilpotency_index(const SquareMatrix& m);

} // namespace jcd

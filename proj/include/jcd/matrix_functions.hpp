#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "jcd/decompose.hpp"
#include "jcd/matrix.hpp"
#include "jcd/polynomial.hpp"

namespace jcd {

// Square matrix whose entries are rational polynomials in one parameter
// (written t in output). Used for the polynomial-in-t exponential factor.
class PolyMatrix {
public:
    explicit PolyMatrix(std::size_t n);
    static PolyMatrix identity(std::size_t n);

    std::size_t dim() const { return n_; }
    Polynomial& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const Polynomial& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    // Entry-wise evaluation at a rational parameter value.
    SquareMatrix operator()(const Rational& t) const;

    // Matrix of the t^k coefficients of all entries.
    SquareMatrix coefficient(int k) const;

    // Largest entry degree; empty when every entry is zero.
    std::optional<int> max_degree() const;

    PolyMatrix derivative() const;

    bool operator==(const PolyMatrix& o) const = default;

    friend PolyMatrix operator*(const SquareMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

private:
    std::size_t n_;
    std::vector<Polynomial> e_;
};

// Exact binomial coefficient, zero for j > m. m may be as large as a 64-bit
// exponent; j stays small (bounded by the matrix dimension here).
Rational binomial(long long m, int j);

// U^m for m >= 0 through the decomposition U = D + N:
//   U^m = sum_j C(m, j) D^{m-j} N^j,  j < nilpotency index of N,
// so the number of terms is bounded by the dimension no matter how large m
// is. D powers use binary exponentiation. Negative m is rejected.
SquareMatrix matrix_power(const SquareMatrix& u, long long m);
SquareMatrix matrix_power(const Decomposition& dec, long long m);

// exp(t N) for nilpotent N: the finite sum of t^j N^j / j! for j below the
// nilpotency index, returned as a polynomial matrix in t. Throws
// not_nilpotent_error when some power of N never vanishes.
PolyMatrix exp_nilpotent_factor(const SquareMatrix& n);

} // namespace jcd

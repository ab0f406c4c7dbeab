#pragma once

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "jcd/matrix.hpp"
#include "jcd/polynomial.hpp"
#include "jcd/rational.hpp"

namespace testsupport {

// A randomized test case with a known-good decomposition: U is conjugate to
// a block-diagonal of Jordan blocks with rational eigenvalues, so the exact
// D and N are known by construction. The conjugating matrix is integer
// unimodular, built from random elementary row operations, hence its inverse
// is again an integer matrix and everything stays small.
struct GeneratedCase {
    jcd::SquareMatrix u;
    jcd::SquareMatrix d_expected;
    jcd::SquareMatrix n_expected;
    // Distinct eigenvalues with their total multiplicity in the char poly
    // and the largest Jordan block size (= multiplicity in the minimal poly).
    struct Root {
        jcd::Rational value;
        int char_multiplicity = 0;
        int max_block = 0;
    };
    std::vector<Root> roots;
};

inline jcd::SquareMatrix random_unimodular(std::size_t n, std::mt19937_64& rng) {
    jcd::SquareMatrix p = jcd::SquareMatrix::identity(n);
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::size_t ops = 2 * n + 2;
    for (std::size_t k = 0; k < ops; ++k) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j)
            continue;
        jcd::Rational c(coef(rng));
        if (c.is_zero())
            continue;
        for (std::size_t col = 0; col < n; ++col)
            p.at(j, col) += c * p.at(i, col);
    }
    return p;
}

inline GeneratedCase make_case(std::size_t n, std::mt19937_64& rng) {
    // Small pool of candidate eigenvalues; repeats across blocks are what
    // produce interesting multiplicities.
    std::vector<jcd::Rational> pool = {jcd::Rational(-2), jcd::Rational(-1),
                                       jcd::Rational(0),  jcd::Rational(1),
                                       jcd::Rational(2),  jcd::Rational(1, 2),
                                       jcd::Rational(-3, 2)};
    std::shuffle(pool.begin(), pool.end(), rng);
    std::size_t distinct = 1 + rng() % std::min<std::size_t>(3, n);
    pool.resize(distinct);

    jcd::SquareMatrix jordan(n);
    jcd::SquareMatrix diag(n);
    std::vector<GeneratedCase::Root> roots(distinct);
    for (std::size_t i = 0; i < distinct; ++i)
        roots[i].value = pool[i];

    std::size_t pos = 0;
    while (pos < n) {
        std::size_t remaining = n - pos;
        std::size_t size = 1 + rng() % std::min<std::size_t>(3, remaining);
        std::size_t which = rng() % distinct;
        const jcd::Rational& lambda = pool[which];
        for (std::size_t k = 0; k < size; ++k) {
            jordan.at(pos + k, pos + k) = lambda;
            diag.at(pos + k, pos + k) = lambda;
            if (k + 1 < size)
                jordan.at(pos + k, pos + k + 1) = 1;
        }
        roots[which].char_multiplicity += static_cast<int>(size);
        roots[which].max_block = std::max(roots[which].max_block, static_cast<int>(size));
        pos += size;
    }

    jcd::SquareMatrix p = random_unimodular(n, rng);
    jcd::SquareMatrix pinv = jcd::inverse(p);
    GeneratedCase out{pinv * jordan * p, pinv * diag * p, jcd::SquareMatrix(n), {}};
    out.n_expected = out.u - out.d_expected;
    for (auto& r : roots)
        if (r.char_multiplicity > 0)
            out.roots.push_back(r);
    return out;
}

// Characteristic polynomial of the generated case, assembled from the known
// spectrum: product of (x - root)^multiplicity.
inline jcd::Polynomial known_char_poly(const GeneratedCase& c) {
    jcd::Polynomial p{1};
    for (const auto& r : c.roots)
        p = p * jcd::pow(jcd::Polynomial{-r.value, 1}, r.char_multiplicity);
    return p;
}

// Minimal polynomial: product of (x - root)^(largest block).
inline jcd::Polynomial known_minimal_poly(const GeneratedCase& c) {
    jcd::Polynomial p{1};
    for (const auto& r : c.roots)
        p = p * jcd::pow(jcd::Polynomial{-r.value, 1}, r.max_block);
    return p;
}

} // namespace testsupport

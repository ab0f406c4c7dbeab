#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "jcd/matrix.hpp"
#include "jcd/polynomial.hpp"

namespace jcd {

// Smallest N with 2^N >= m. The Newton step at least doubles the multiplicity
// handled per pass, so N passes always suffice for roots of multiplicity m.
int iteration_bound(int m);

// One full run of the Newton iteration in Q[x]/(p):
//   h_0 = x,  h_{k+1} = h_k - p_tilde(h_k) * q(h_k)   (mod p)
// with q the inverse of p_tilde' modulo p_bar, fixed once up front. The loop
// runs iteration_bound(m) times; h = h_m is the certificate: substituting any
// matrix annihilated by p for x gives its semi-simple part.
struct QuotientRun {
    Polynomial h;                    // final iterate, degree < deg p
    int iterations = 0;              // number of Newton steps taken
    Polynomial annihilator;          // monic p the run worked modulo
    Polynomial p_tilde;              // squarefree part of p
    Polynomial p_bar;                // p / p_tilde
    Polynomial q;                    // inverse of p_tilde' mod p_bar (zero when m = 1)
    int multiplicity = 1;            // largest root multiplicity m
    std::vector<Polynomial> iterates; // h_0 .. h_iterations
};
QuotientRun newton_quotient(const Polynomial& p);

// Additive decomposition U = D + N with D = h(U) annihilated by the
// squarefree p_tilde, N = U - D nilpotent, and D N = N D (both are
// polynomials in U). No eigenvalues are computed at any point.
struct Decomposition {
    SquareMatrix d;
    SquareMatrix n;
    Polynomial h;
    int iterations = 0;
    Polynomial annihilator;
    Polynomial p_tilde;
    Polynomial p_bar;
    int multiplicity = 1;
};

// annihilator defaults to the characteristic polynomial; a supplied one must
// be nonconstant and satisfy annihilator(U) = 0 (else invalid_annihilator_error).
Decomposition jordan_chevalley(const SquareMatrix& u,
                               const std::optional<Polynomial>& annihilator = std::nullopt);

// Same decomposition computed directly in matrix space:
//   D_0 = U,  D_{k+1} = D_k - p_tilde(D_k) * q(D_k),
// stopping as soon as p_tilde(D_k) = 0 (which can happen before the
// worst-case bound when the minimal polynomial has smaller multiplicities).
// The certificate h is tracked alongside so h(U) = D still holds at the
// actual stopping point. Agrees entrywise with jordan_chevalley.
Decomposition newton_matrix(const SquareMatrix& u, const Polynomial& annihilator);

// Congruence system h = value_j (mod (x - root_j)^multiplicity_j) with
// distinct rational roots; value_j = root_j recovers the semi-simple
// certificate. Solved by incremental CRT; the result is the unique solution
// of degree < sum of the multiplicities.
struct Congruence {
    Rational root;
    int multiplicity = 1;
    Rational value;
};
Polynomial crt_solve(const std::vector<Congruence>& system);

// Independent check of a claimed decomposition. Each field records one
// property; pass() is their conjunction.
struct VerificationReport {
    bool sum = false;          // u == d + n
    bool commutation = false;  // d n == n d
    bool nilpotency = false;   // n^k == 0 for some k <= dim
    std::optional<int> nilpotency_index; // the k found, when nilpotent
    bool separability = false; // p_tilde(d) == 0 with p_tilde squarefree
    bool certificate = false;  // h(u) == d and deg h < deg annihilator
    bool pass() const {
        return sum && commutation && nilpotency && separability && certificate;
    }
};
VerificationReport verify_decomposition(const SquareMatrix& u, const Decomposition& dec);

// Multiplicative form U = D * V with V = I + D^{-1} N unipotent. Requires U
// invertible (equivalently D invertible); throws singular_matrix_error.
std::pair<SquareMatrix, SquareMatrix> multiplicative(const SquareMatrix& u);
std::pair<SquareMatrix, SquareMatrix> multiplicative(const Decomposition& dec);

} // namespace jcd

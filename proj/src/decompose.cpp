#include "jcd/decompose.hpp"

#include <cassert>
#include <utility>

namespace jcd {

int iteration_bound(int m) {
    if (m < 1)
        throw precondition_error("iteration_bound: multiplicity must be at least 1");
    int n = 0;
    while ((1 << n) < m)
        ++n;
    return n;
}

QuotientRun newton_quotient(const Polynomial& p) {
    if (p.is_constant())
        throw precondition_error("newton_quotient: polynomial must be nonconstant");
    QuotientRun run;
    run.annihilator = p.monic();
    SeparablePart sep = separable_part(run.annihilator);
    run.p_tilde = std::move(sep.p_tilde);
    run.p_bar = std::move(sep.p_bar);
    run.multiplicity = sep.multiplicity;

    Polynomial h = divrem(Polynomial::x(), run.annihilator).second;
    run.iterates.push_back(h);
    if (run.multiplicity == 1) {
        // p is already squarefree: x itself is the certificate and no
        // correction step is needed. q stays zero (p_bar is constant, so
        // everything is an inverse mod p_bar; zero is the reduced choice).
        run.h = std::move(h);
        return run;
    }

    // q inverts the derivative of p_tilde modulo p_bar. It is computed once:
    // the same q works at every step because only the class of q(h_k) modulo
    // p_bar(h_k) matters, and that class is determined by q mod p_bar.
    run.q = mod_inverse(run.p_tilde.derivative(), run.p_bar);

    // h_{k+1} = h_k - p_tilde(h_k) q(h_k) mod p. Each step at least doubles
    // the power of p_tilde dividing p_tilde(h_k), so iteration_bound(m)
    // steps reach p_tilde(h) = 0 in the quotient ring.
    int steps = iteration_bound(run.multiplicity);
    for (int k = 0; k < steps; ++k) {
        Polynomial pt_h = compose_mod(run.p_tilde, h, run.annihilator);
        Polynomial q_h = compose_mod(run.q, h, run.annihilator);
        h = divrem(h - pt_h * q_h, run.annihilator).second;
        run.iterates.push_back(h);
    }
    run.iterations = steps;
    run.h = std::move(h);
    return run;
}

namespace {

void check_annihilator(const SquareMatrix& u, const Polynomial& p) {
    if (p.is_constant())
        throw invalid_annihilator_error("annihilator must be nonconstant");
    if (!eval_at(p, u).is_zero())
        throw invalid_annihilator_error("polynomial does not annihilate the matrix");
}

Decomposition assemble(const SquareMatrix& u, QuotientRun run) {
    SquareMatrix d = eval_at(run.h, u);
    SquareMatrix n = u - d;
    return Decomposition{std::move(d),
                         std::move(n),
                         std::move(run.h),
                         run.iterations,
                         std::move(run.annihilator),
                         std::move(run.p_tilde),
                         std::move(run.p_bar),
                         run.multiplicity};
}

} // namespace

Decomposition jordan_chevalley(const SquareMatrix& u,
                               const std::optional<Polynomial>& annihilator) {
    Polynomial p;
    if (annihilator) {
        check_annihilator(u, *annihilator);
        p = *annihilator;
    } else {
        p = char_poly(u); // annihilates by Cayley-Hamilton, no check needed
    }
    return assemble(u, newton_quotient(p));
}

Decomposition newton_matrix(const SquareMatrix& u, const Polynomial& annihilator) {
    check_annihilator(u, annihilator);
    Polynomial pm = annihilator.monic();
    SeparablePart sep = separable_part(pm);

    Polynomial q;
    if (sep.multiplicity > 1)
        q = mod_inverse(sep.p_tilde.derivative(), sep.p_bar);

    // Iterate on the matrix directly, stopping when p_tilde(D) vanishes.
    // This can happen before iteration_bound(m) steps when the minimal
    // polynomial of U has lower multiplicities than the annihilator supplied.
    // The certificate h is advanced in lockstep so h(U) = D is preserved.
    SquareMatrix d = u;
    Polynomial h = divrem(Polynomial::x(), pm).second;
    int steps = 0;
    int bound = iteration_bound(sep.multiplicity);
    for (;;) {
        SquareMatrix pt_d = eval_at(sep.p_tilde, d);
        if (pt_d.is_zero())
            break;
        if (steps >= bound)
            throw error("newton_matrix: iteration failed to converge within its bound");
        d -= pt_d * eval_at(q, d);
        // Every iterate remains a root of the annihilator (checked only in
        // debug builds; it is an identity of the iteration, not input
        // validation).
        assert(eval_at(pm, d).is_zero());
        Polynomial pt_h = compose_mod(sep.p_tilde, h, pm);
        Polynomial q_h = compose_mod(q, h, pm);
        h = divrem(h - pt_h * q_h, pm).second;
        ++steps;
    }

    SquareMatrix n = u - d;
    return Decomposition{std::move(d),
                         std::move(n),
                         std::move(h),
                         steps,
                         std::move(pm),
                         std::move(sep.p_tilde),
                         std::move(sep.p_bar),
                         sep.multiplicity};
}

Polynomial crt_solve(const std::vector<Congruence>& system) {
    if (system.empty())
        throw precondition_error("crt_solve: empty congruence system");
    for (std::size_t i = 0; i < system.size(); ++i) {
        if (system[i].multiplicity < 1)
            throw precondition_error("crt_solve: multiplicity must be at least 1");
        for (std::size_t j = i + 1; j < system.size(); ++j)
            if (system[i].root == system[j].root)
                throw duplicate_root_error("crt_solve: repeated root " +
                                           system[i].root.to_string());
    }

    // Incremental Chinese remaindering. Invariant: r solves all congruences
    // handled so far and deg r < deg modulus.
    Polynomial r;
    Polynomial modulus{1};
    for (const auto& c : system) {
        Polynomial factor = pow(Polynomial{-c.root, 1}, c.multiplicity);
        // Find t with r + modulus * t = value (mod factor). The moduli are
        // pairwise coprime (distinct roots), so modulus is invertible here.
        Polynomial target = divrem(Polynomial::constant(c.value) - r, factor).second;
        if (target.is_zero()) {
            modulus = modulus * factor;
            continue;
        }
        Polynomial inv = mod_inverse(modulus, factor);
        Polynomial t = divrem(target * inv, factor).second;
        r += modulus * t;
        modulus = modulus * factor;
    }
    return r;
}

VerificationReport verify_decomposition(const SquareMatrix& u, const Decomposition& dec) {
    if (u.dim() != dec.d.dim() || u.dim() != dec.n.dim())
        throw dimension_error("verify: matrices have mismatched dimensions");
    VerificationReport rep;
    rep.sum = (dec.d + dec.n == u);
    rep.commutation = (dec.d * dec.n == dec.n * dec.d);
    rep.nilpotency_index = nilpotency_index(dec.n);
    rep.nilpotency = rep.nilpotency_index.has_value();
    if (!dec.p_tilde.is_constant()) {
        bool squarefree = gcd(dec.p_tilde, dec.p_tilde.derivative()).is_constant();
        rep.separability = squarefree && eval_at(dec.p_tilde, dec.d).is_zero();
    }
    if (auto da = dec.annihilator.degree()) {
        bool degree_ok = dec.h.is_zero() || *dec.h.degree() < *da;
        rep.certificate = degree_ok && eval_at(dec.h, u) == dec.d;
    }
    return rep;
}

std::pair<SquareMatrix, SquareMatrix> multiplicative(const Decomposition& dec) {
    // V = I + D^{-1} N; inverse() throws singular_matrix_error when D (hence
    // U) is not invertible.
    SquareMatrix v = SquareMatrix::identity(dec.d.dim()) + inverse(dec.d) * dec.n;
    return {dec.d, v};
}

std::pair<SquareMatrix, SquareMatrix> multiplicative(const SquareMatrix& u) {
    return multiplicative(jordan_chevalley(u));
}

} // namespace jcd

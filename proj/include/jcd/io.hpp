#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "jcd/decompose.hpp"
#include "jcd/matrix.hpp"
#include "jcd/matrix_functions.hpp"
#include "jcd/polynomial.hpp"
#include "jcd/rational.hpp"

namespace jcd {

// Text formats, all exact round-trips:
//   rational    ['-'] digits ['/' digits]              e.g. -7/3
//   polynomial  comma-separated rationals, lowest degree first; "0" is zero
//   matrix      [[r, r, ...], [r, r, ...], ...], whitespace-insensitive,
//               rows of equal length, row count == column count
// Formatters emit the canonical spelling: ", " separators, no padding.

Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

Polynomial parse_polynomial(std::string_view text);
std::string format_polynomial(const Polynomial& p);

SquareMatrix parse_matrix(std::string_view text);
std::string format_matrix(const SquareMatrix& m);

// Output-only symbolic form for polynomial-entry matrices, lowest degree
// first per entry: [[1, 1 - 1/2*t + t^2], [0, 1]].
std::string format_poly_matrix(const PolyMatrix& m, char variable = 't');

// Decomposition document: "key = value" lines. Written fields are u, d, n,
// h, annihilator, p_tilde, p_bar, iterations, the verification.* block, and
// optionally the run internals (q, h_0 ... h_k). The parser skips blank
// lines, '#' comments and unknown keys; d and n are required, everything
// else is optional. The recorded u lets a later verify detect tampering of
// d or n through the sum check; when absent, u defaults to d + n.
struct Document {
    std::optional<SquareMatrix> u;
    Decomposition dec;
    std::optional<VerificationReport> report;
};

std::string format_document(const SquareMatrix& u, const Decomposition& dec,
                            const VerificationReport& report,
                            const QuotientRun* intermediates = nullptr);
Document parse_document(std::string_view text);

// The verification.* lines alone, as written into documents and printed by
// the verify command. "overall" is the conjunction of the parts.
std::string format_report(const VerificationReport& report);

} // namespace jcd

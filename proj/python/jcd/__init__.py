"""Exact Jordan-Chevalley decomposition of rational matrices.

Everything is computed in exact rational arithmetic; no eigenvalues are ever
extracted. The heavy lifting lives in the compiled extension ``jcd._core``.
"""

from ._core import (
    Congruence,
    Decomposition,
    Document,
    MathError,
    ParseError,
    PolyMatrix,
    Polynomial,
    QuotientRun,
    Rational,
    SquareMatrix,
    VerificationReport,
    char_poly,
    crt_solve,
    eval_at,
    exp_nilpotent_factor,
    format_document,
    format_matrix,
    format_polynomial,
    inverse,
    jordan_chevalley,
    matrix_power,
    multiplicative,
    newton_matrix,
    newton_quotient,
    nilpotency_index,
    parse_document,
    parse_matrix,
    parse_polynomial,
    poly_gcd,
    separable_part,
    verify_decomposition,
)

__all__ = [
    "Congruence",
    "Decomposition",
    "Document",
    "MathError",
    "ParseError",
    "PolyMatrix",
    "Polynomial",
    "QuotientRun",
    "Rational",
    "SquareMatrix",
    "VerificationReport",
    "char_poly",
    "crt_solve",
    "eval_at",
    "exp_nilpotent_factor",
    "format_document",
    "format_matrix",
    "format_polynomial",
    "inverse",
    "jordan_chevalley",
    "matrix_power",
    "multiplicative",
    "newton_matrix",
    "newton_quotient",
    "nilpotency_index",
    "parse_document",
    "parse_matrix",
    "parse_polynomial",
    "poly_gcd",
    "separable_part",
    "verify_decomposition",
]

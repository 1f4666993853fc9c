"""Exact arithmetic: Q, Q(u), quadratic extensions, sparse polynomials."""

from .factor import UFactorization, factor_square_free_in_u, strip_admissibility
from .linalg import det, minors2, nullspace, rank, row_echelon
from .mpoly import MPoly, NotDivisible, linear_coefficients
from .parse import ParseError, UndeclaredVariable, parse, parse_scalar
from .resultant import (
    gcd_coeffs,
    poly_rem,
    resultant,
    resultant_by_determinant,
    resultant_coeffs,
    resultant_multivariate,
    sylvester_matrix,
)
from .scalars import (
    U,
    QuadExt,
    Radical,
    RadicalMismatch,
    Rat,
    RatFunc,
    SpecializationError,
    UPoly,
    is_square,
    normalize,
    scalar_sqrt,
    scalar_str,
    specialize,
)

__all__ = [
    "MPoly", "NotDivisible", "ParseError", "QuadExt", "Radical", "RadicalMismatch", "Rat",
    "RatFunc", "SpecializationError", "U", "UFactorization", "UPoly", "UndeclaredVariable",
    "det", "gcd_coeffs", "poly_rem", "factor_square_free_in_u", "is_square", "linear_coefficients", "minors2",
    "normalize", "nullspace", "parse", "parse_scalar", "rank", "resultant",
    "resultant_by_determinant", "resultant_coeffs", "resultant_multivariate", "row_echelon",
    "scalar_sqrt", "scalar_str", "specialize", "strip_admissibility", "sylvester_matrix",
]

"""
Exact rational linear algebra used by every geometric computation.
"""

from .rational_matrix import (
    IntegerEchelon,
    RationalMatrix,
    RationalScalar,
    determinant,
    integer_rank,
    inverse,
    kernel_vector,
    nullspace,
    primitive,
    rank,
    solve,
)

__all__ = [
    "RationalMatrix",
    "RationalScalar",
    "IntegerEchelon",
    "determinant",
    "integer_rank",
    "inverse",
    "kernel_vector",
    "nullspace",
    "primitive",
    "rank",
    "solve",
]

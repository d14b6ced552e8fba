"""Exact arithmetic over GF(2) and GF(4)."""

from .binmatrix import BinMatrix, mat_det, mat_nullspace, mat_rank
from .binpoly import (
    ONE,
    X,
    BinPoly,
    count_divisors,
    divisors_of_xn_plus_1,
    expand,
    factor,
    factor_xn_plus_1,
    format_bits,
    format_factored,
    format_sum,
    is_irreducible,
    parse_poly,
    poly_divmod,
    poly_gcd,
    poly_lcm,
    poly_reciprocal,
)
from .gf4 import W, W2, f2_trace, f4_conj, f4_mul, format_vector, parse_vector

__all__ = [
    "BinMatrix", "mat_det", "mat_nullspace", "mat_rank",
    "ONE", "X", "BinPoly", "count_divisors", "divisors_of_xn_plus_1", "expand",
    "factor", "factor_xn_plus_1", "format_bits", "format_factored", "format_sum",
    "is_irreducible", "parse_poly", "poly_divmod", "poly_gcd", "poly_lcm",
    "poly_reciprocal",
    "W", "W2", "f2_trace", "f4_conj", "f4_mul", "format_vector", "parse_vector",
]

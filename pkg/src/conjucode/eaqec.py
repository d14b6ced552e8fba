"""Entanglement-assisted quantum codes from binary (trace) codes.

Two linear codes [n, k1, d1], [n, k2, d2] with parity-check matrices H1, H2
give an [[n, k1 + k2 - n + c, min(d1, d2); c]] code with c = rank(H1 H2^T).
Taking both codes equal to one code Tr(C) gives
[[n, k - dim hull, d; c]] with c = rank(H H^T) = (n - k) - dim hull.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra.binmatrix import BinMatrix
from .algebra.binpoly import poly_reciprocal
from .tracecode import CyclicCode, hull_generator


@dataclass(frozen=True)
class EaqecParams:
    n: int
    k: int
    d: int | None
    c: int
    source: str = ""

    @property
    def rate(self) -> Fraction:
        return Fraction(self.k, self.n)

    @property
    def net_rate(self) -> Fraction:
        return Fraction(self.k - self.c, self.n)

    @property
    def maximal(self) -> bool:
        return is_maximal_entanglement(self)

    def brackets(self) -> str:
        d = "?" if self.d is None else str(self.d)
        return f"[[{self.n},{self.k},{d};{self.c}]]"

    def report_line(self) -> str:
        line = (f"{self.brackets()} rate={float(self.rate):.4f} "
                f"net={float(self.net_rate):.4f} maximal={str(self.maximal).lower()}")
        return f"{line} source={self.source}" if self.source else line


def parity_matrix(code: CyclicCode) -> BinMatrix:
    """(n - dim) x n matrix of shifts of h*; rows span the dual.

    The full space gets an empty matrix, the zero code the identity.
    """
    hstar = poly_reciprocal(code.h)
    return BinMatrix([hstar.bits << i for i in range(code.n - code.dim)], code.n)


def ebit_count(H1: BinMatrix, H2: BinMatrix) -> int:
    """rank(H1 H2^T)."""
    if H1.ncols != H2.ncols:
        raise ValueError(f"column mismatch: {H1.ncols} != {H2.ncols}")
    return (H1 @ H2.T).rank()


def hull_dim(code: CyclicCode) -> int:
    return code.n - hull_generator(code).degree


def eaqec_from_trace(code: CyclicCode, d: int | None, source: str = "") -> EaqecParams:
    H = parity_matrix(code)
    c = ebit_count(H, H)
    hd = hull_dim(code)
    if c != (code.n - code.dim) - hd:
        raise AssertionError(f"rank(HH^T) = {c} but dim(C^perp) - dim(hull) = {code.n - code.dim - hd}")
    return EaqecParams(code.n, code.dim - hd, d, c, source)


def eaqec_wilde_brun(c1: CyclicCode, d1: int | None, c2: CyclicCode, d2: int | None,
                     source: str = "") -> EaqecParams:
    if c1.n != c2.n:
        raise ValueError(f"length mismatch: {c1.n} != {c2.n}")
    c = ebit_count(parity_matrix(c1), parity_matrix(c2))
    d = None if d1 is None or d2 is None else min(d1, d2)
    return EaqecParams(c1.n, c1.dim + c2.dim - c1.n + c, d, c, source)


def is_maximal_entanglement(p: EaqecParams) -> bool:
    return p.c == p.n - p.k

"""Binary cyclic trace codes of ACC codes.

For C = Psi(D) with D = <g> of length 2n, the trace code Tr(C) = Phi(D)
where Phi = Tr o Psi folds a length-2n word onto length n by adding its two
halves.  Folding commutes with the cyclic shift, so Tr(C) is the cyclic code
generated by r = gcd(Phi_p(g), x^n + 1); likewise Tr(C^perp_Tr) is generated by
t = gcd(Phi_p(h*), x^n + 1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .acc import AccCode, image_int, vec_trace
from .algebra.binmatrix import BinMatrix
from .algebra.binpoly import BinPoly, poly_gcd, poly_lcm, poly_reciprocal
from .distance import (
    DEFAULT_MAX_DIM,
    EMPTY_CODE,
    beyond_bound,
    min_weight_exhaustive,
    min_weight_info_sets,
)


@dataclass(frozen=True)
class CyclicCode:
    """Binary cyclic code <r> of length n, r | x^n + 1.

    ``r = x^n + 1`` is the zero code and ``r = 1`` the full space.
    """

    n: int
    r: BinPoly
    dim: int = field(init=False)

    def __post_init__(self):
        if self.r.is_zero() or not self.r.divides(BinPoly.x_n_plus_1(self.n)):
            raise ValueError(f"{self.r} does not divide x^{self.n}+1")
        object.__setattr__(self, "dim", self.n - self.r.degree)

    @property
    def h(self) -> BinPoly:
        return BinPoly.x_n_plus_1(self.n) // self.r

    def generator_matrix(self) -> BinMatrix:
        """Rows x^i r(x), i < dim."""
        return BinMatrix([self.r.bits << i for i in range(self.dim)], self.n)

    def dual(self) -> "CyclicCode":
        return CyclicCode(self.n, poly_reciprocal(self.h))

    def contains(self, word: int) -> bool:
        return self.r.divides(BinPoly(word))

    def codewords(self) -> list[int]:
        words = [0]
        for row in self.generator_matrix().rows:
            words += [w ^ row for w in words]
        return words

    def __str__(self) -> str:
        return f"[{self.n},{self.dim}] <{self.r}>"


# --- Phi --------------------------------------------------------------------------

def phi_vec(u: Sequence[int]) -> tuple:
    """Phi(u)_i = u_i + u_{n+i} for a length-2n binary vector."""
    if len(u) % 2:
        raise ValueError(f"Phi needs an even-length vector, got length {len(u)}")
    n = len(u) // 2
    return tuple((u[i] ^ u[n + i]) & 1 for i in range(n))


def phi_poly(g: BinPoly, n: int) -> BinPoly:
    """Fold the coefficients of g (deg g < 2n): coefficient i becomes g_i + g_{n+i}."""
    if g.degree >= 2 * n:
        raise ValueError(f"degree {g.degree} does not fit in length {2 * n}")
    mask = (1 << n) - 1
    return BinPoly((g.bits & mask) ^ (g.bits >> n))


def _fold_word(p: BinPoly, n: int) -> BinPoly:
    # x^2n + 1 generates the zero code in length 2n; its codeword is 0
    return BinPoly(0) if p.degree >= 2 * n else phi_poly(p, n)


def _cyclic_from(word: BinPoly, n: int) -> CyclicCode:
    mod = BinPoly.x_n_plus_1(n)
    return CyclicCode(n, mod if word.is_zero() else poly_gcd(word, mod))


def trace_code_of(C: AccCode) -> CyclicCode:
    """Tr(C) = <gcd(Phi_p(g), x^n + 1)>."""
    return _cyclic_from(_fold_word(C.require_g(), C.n), C.n)


def trace_of_dual(C: AccCode) -> CyclicCode:
    """Tr(C^perp_Tr) = <gcd(Phi_p(h*), x^n + 1)> with h = (x^2n + 1)/g."""
    return _cyclic_from(_fold_word(poly_reciprocal(C.h), C.n), C.n)


@dataclass(frozen=True)
class TraceAnalysis:
    n: int
    g: BinPoly
    r: BinPoly
    t: BinPoly
    dual_gen: BinPoly
    inclusion_strict: bool
    equality_condition: bool
    acd: bool
    trace_lcd: bool

    @property
    def lcd_criterion_applies(self) -> bool:
        """Both hypotheses of the LCD criterion: C is ACD and t | (x^n+1)/r*."""
        return self.acd and self.equality_condition


def duality_report(C: AccCode) -> TraceAnalysis:
    """Compare Tr(C^perp_Tr) = <t> with Tr(C)^perp = <(x^n+1)/r*>.

    <t> is always inside <dual_gen> (dual_gen | t); equality holds iff
    t | dual_gen as well, i.e. t = dual_gen.
    """
    from .acc import is_acd

    tc = trace_code_of(C)
    td = trace_of_dual(C)
    dual_gen = tc.dual().r
    if not dual_gen.divides(td.r):
        raise AssertionError(f"(x^n+1)/r* = {dual_gen} does not divide t = {td.r}")
    equal = td.r.divides(dual_gen)
    return TraceAnalysis(
        n=C.n, g=C.require_g(), r=tc.r, t=td.r, dual_gen=dual_gen,
        inclusion_strict=not equal, equality_condition=equal,
        acd=is_acd(C), trace_lcd=is_lcd(tc),
    )


def hull_generator(code: CyclicCode) -> BinPoly:
    """lcm(r, h*): generator of code cap code^perp."""
    return poly_lcm(code.r, poly_reciprocal(code.h))


def is_lcd(code: CyclicCode) -> bool:
    return hull_generator(code) == BinPoly.x_n_plus_1(code.n)


def embed_binary(bits: Sequence[int]) -> tuple:
    """GF(2)^n -> GF(4)^n, 0 -> 0 and 1 -> 1."""
    return tuple(b & 1 for b in bits)


def tr_subset_check(C: AccCode) -> bool:
    """Whether Tr(c), read as a vector over GF(4), lies in C for every c in C.

    Tr is F2-linear, so the generator rows suffice.
    """
    img = C.image_matrix()
    return all(img.contains_row(image_int(embed_binary(vec_trace(r)))) for r in C.gen_rows)


def min_distance(code: CyclicCode, max_dim: int = DEFAULT_MAX_DIM, method: str = "exhaustive"):
    """Minimum Hamming weight of a nonzero codeword.

    ``exhaustive`` walks all 2^dim - 1 codewords and gives up (NotComputed)
    above ``max_dim``; ``info-sets`` runs the Brouwer-Zimmermann search and
    ignores the bound.
    """
    if code.dim == 0:
        return EMPTY_CODE
    rows = list(code.generator_matrix().rows)
    if method == "info-sets":
        return min_weight_info_sets(rows, code.n, cyclic=True)
    if method != "exhaustive":
        raise ValueError(f"unknown method {method!r}")
    if code.dim > max_dim:
        return beyond_bound(code.dim, max_dim)
    return min_weight_exhaustive(rows, code.n, max_dim)


def phi_orthogonality_check(D: CyclicCode, pairs: int | None = 200,
                            rng: np.random.Generator | None = None) -> bool:
    """Phi(a) . Phi(b) = 0 for a in D and b in D^perp (D of even length).

    ``pairs=None`` checks every pair of basis vectors, which by bilinearity
    covers all of D x D^perp; otherwise random pairs are drawn.
    """
    if D.n % 2:
        raise ValueError("D must have even length 2n")
    n = D.n // 2
    mask = (1 << n) - 1

    def fold(w: int) -> int:
        return (w & mask) ^ (w >> n)

    A = D.generator_matrix().rows
    B = D.dual().generator_matrix().rows
    if pairs is None:
        return all((fold(a) & fold(b)).bit_count() % 2 == 0 for a in A for b in B)
    rng = rng or np.random.default_rng(0)

    def sample(rows) -> int:
        w = 0
        for r, bit in zip(rows, rng.integers(0, 2, size=len(rows))):
            if bit:
                w ^= r
        return w

    return all((fold(sample(A)) & fold(sample(B))).bit_count() % 2 == 0 for _ in range(pairs))


def trace_words(C: AccCode) -> set[int]:
    """{Tr(c) : c in C} by enumeration, packed as ints; exponential in dim."""
    out = set()
    for c in C.codewords():
        t = vec_trace(c)
        out.add(sum(b << i for i, b in enumerate(t)))
    return out

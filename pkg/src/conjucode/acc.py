"""Additive conjucyclic (ACC) codes over GF(4).

An ACC code C of length n is the image Psi(D) of a binary cyclic code D of
length 2n, where

    Psi(u)_i = u_i + (u_i + u_{n+i}) w,

and C is closed under the conjugate shift T(c) = (conj(c_{n-1}), c_0, ...,
c_{n-2}).  Since <Psi(a), Psi(b)> = a . b, trace duals, hulls and the
complementarity tests can all be read off the binary image; the functions
here also keep a direct GF(4) route (``trace_mat_mul``) so the two can be
checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .algebra.binmatrix import BinMatrix
from .algebra.binpoly import (
    BinPoly,
    poly_gcd_many,
    poly_lcm,
    poly_reciprocal,
)
from .algebra.gf4 import CONJ_TABLE, GRAY_TABLE, TRACE_TABLE, euclid_inner, f2_trace
from .distance import DEFAULT_MAX_DIM, EMPTY_CODE, beyond_bound, min_weight_exhaustive


class NotConjucyclicError(ValueError):
    """Raised when an operation needs the generator polynomial of the binary
    image and the code does not have one."""


# --- the Psi / phi correspondence -------------------------------------------------

def psi(u: Sequence[int]) -> tuple:
    """F2^(2n) -> F4^n, component i = u_i + (u_i + u_{n+i}) w."""
    if len(u) % 2:
        raise ValueError(f"Psi needs an even-length vector, got length {len(u)}")
    n = len(u) // 2
    return tuple((u[i] & 1) | (((u[i] ^ u[n + i]) & 1) << 1) for i in range(n))


def phi_inv(c: Sequence[int]) -> tuple:
    """Inverse of psi: (a_0..a_{n-1}, a_0+b_0 .. a_{n-1}+b_{n-1}) for c_i = a_i + b_i w."""
    lo = tuple(x & 1 for x in c)
    hi = tuple((x & 1) ^ (x >> 1) for x in c)
    return lo + hi


def _to_int(bits: Sequence[int]) -> int:
    v = 0
    for i, b in enumerate(bits):
        if b:
            v |= 1 << i
    return v


def _from_int(v: int, length: int) -> tuple:
    return tuple((v >> i) & 1 for i in range(length))


def image_int(c: Sequence[int]) -> int:
    """phi_inv(c) packed as an int (bit j = coordinate j of the length-2n vector)."""
    n = len(c)
    v = 0
    for i, x in enumerate(c):
        a = x & 1
        if a:
            v |= 1 << i
        if a ^ (x >> 1):
            v |= 1 << (n + i)
    return v


def psi_int(v: int, n: int) -> tuple:
    return psi(_from_int(v, 2 * n))


def conj_shift(c: Sequence[int], times: int = 1) -> tuple:
    """The conjucyclic shift T applied ``times`` times."""
    c = tuple(c)
    for _ in range(times % (2 * len(c)) if c else 0):
        c = (CONJ_TABLE[c[-1]],) + c[:-1]
    return c


def cyclic_shift(u: Sequence[int], times: int = 1) -> tuple:
    """sigma: (u_{m-1}, u_0, ..., u_{m-2}) applied ``times`` times."""
    u = tuple(u)
    if not u:
        return u
    s = times % len(u)
    return u[len(u) - s:] + u[:len(u) - s]


# --- codes ------------------------------------------------------------------------

@dataclass(frozen=True)
class AccCode:
    """An additive code over GF(4) given by an F2 basis ``gen_rows``.

    ``g`` is the generator polynomial of the binary image D (length 2n) when
    the code is conjucyclic; codes built from arbitrary rows get ``g`` only if
    their row space turns out to be T-closed.
    """

    n: int
    gen_rows: tuple
    g: BinPoly | None = None
    dim: int = field(init=False)

    def __post_init__(self):
        for r in self.gen_rows:
            if len(r) != self.n:
                raise ValueError(f"generator row of length {len(r)} in a length-{self.n} code")
        object.__setattr__(self, "dim", self.image_matrix().rank())

    @property
    def length2(self) -> int:
        return 2 * self.n

    @property
    def modulus(self) -> BinPoly:
        return BinPoly.x_n_plus_1(2 * self.n)

    @property
    def is_conjucyclic(self) -> bool:
        return self.g is not None

    def image_matrix(self) -> BinMatrix:
        """Rows phi_inv(c) for c in gen_rows: a generator matrix of D."""
        return BinMatrix([image_int(r) for r in self.gen_rows], 2 * self.n)

    def require_g(self) -> BinPoly:
        if self.g is None:
            raise NotConjucyclicError(
                "generator polynomial of the binary image is unknown; "
                "build the code with acc_from_gen_poly or acc_from_vector")
        return self.g

    @property
    def h(self) -> BinPoly:
        """Check polynomial (x^2n + 1) / g of the binary image."""
        return self.modulus // self.require_g()

    def contains(self, c: Sequence[int]) -> bool:
        return self.image_matrix().contains_row(image_int(c))

    def same_code(self, other: "AccCode") -> bool:
        return self.n == other.n and self.image_matrix().same_row_space(other.image_matrix())

    def codewords(self):
        """Every codeword; 2^dim of them, so keep dim small."""
        basis = self.image_matrix().row_basis().rows
        words = [0]
        for r in basis:
            words += [w ^ r for w in words]
        return [psi_int(w, self.n) for w in words]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], n: int | None = None) -> "AccCode":
        """Additive code spanned by ``rows``; detects conjucyclicity."""
        rows = tuple(tuple(r) for r in rows)
        if n is None:
            if not rows:
                raise ValueError("length is required for an empty generator list")
            n = len(rows[0])
        basis = BinMatrix([image_int(r) for r in rows], 2 * n).row_basis()
        code = cls(n, tuple(psi_int(v, n) for v in basis.rows))
        g = _image_generator(code)
        return cls(n, code.gen_rows, g) if g is not None else code


def _image_generator(code: AccCode) -> BinPoly | None:
    """g(x) of the binary image if the row space is T-closed, else None."""
    n = code.n
    mod = code.modulus
    img = code.image_matrix()
    for r in code.gen_rows:
        if not img.contains_row(image_int(conj_shift(r))):
            return None
    g = poly_gcd_many([BinPoly(v) for v in img.rows] + [mod])
    # T-closure makes D cyclic, hence D = <g>; guard against a bad basis anyway
    if 2 * n - g.degree != code.dim:
        return None
    return g


def _rows_from_poly(p: BinPoly, n: int, count: int) -> tuple:
    xi = p.coeffs(2 * n) if p.degree < 2 * n else (0,) * (2 * n)
    eta = psi(xi)
    rows = []
    for _ in range(count):
        rows.append(eta)
        eta = conj_shift(eta)
    return tuple(rows)


def acc_from_gen_poly(g: BinPoly, n: int) -> AccCode:
    """ACC code Psi(<g>) with generator matrix rows T^i(Psi(xi_g)),
    i = 0 .. 2n - deg(g) - 1.  ``g = x^2n + 1`` gives the zero code."""
    mod = BinPoly.x_n_plus_1(2 * n)
    if g.is_zero() or not g.divides(mod):
        raise ValueError(f"{g} does not divide x^{2 * n}+1")
    return AccCode(n, _rows_from_poly(g, n, 2 * n - g.degree), g)


def acc_from_vector(v: Sequence[int]) -> AccCode:
    """The smallest ACC code containing ``v``: span of its T-orbit.

    The binary image is the cyclic code spanned by shifts of phi_inv(v),
    whose generator is gcd(phi_inv(v)(x), x^2n + 1).  The first dim orbit
    vectors already form a basis.
    """
    v = tuple(v)
    n = len(v)
    mod = BinPoly.x_n_plus_1(2 * n)
    u = BinPoly(image_int(v))
    g = mod if u.is_zero() else poly_gcd_many([u, mod])
    k = 2 * n - g.degree
    rows = []
    c = v
    for _ in range(k):
        rows.append(c)
        c = conj_shift(c)
    return AccCode(n, tuple(rows), g)


# --- trace products ------------------------------------------------------------------

def f4_matrix_planes(a: Sequence[Sequence[int]], ncols: int | None = None):
    arr = np.asarray(a, dtype=np.int64)
    if arr.size == 0:
        arr = arr.reshape(len(a), ncols or 0)
    return arr & 1, arr >> 1


def f4_transpose(a: Sequence[Sequence[int]]) -> list:
    return [list(col) for col in zip(*a)]


def trace_mat_mul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]],
                  inner: int | None = None) -> BinMatrix:
    """A (.)_Tr B = Tr(A B) for GF(4) matrices, a binary matrix.

    For x = a + b w and y = c + d w, Tr(xy) = ad + bc + bd, so the product
    splits into three binary matrix products over the bit planes.  ``inner``
    fixes the shared dimension when A has no rows or B has no columns.
    """
    m = len(A)
    if inner is None:
        inner = len(A[0]) if m else len(B)
    p = len(B[0]) if len(B) else 0
    if m and len(A[0]) != inner or len(B) != inner:
        raise ValueError(f"cannot form ({m}x{len(A[0]) if m else inner}) (.)_Tr ({len(B)}x{p})")
    if m == 0 or p == 0 or inner == 0:
        return BinMatrix.zeros(m, p)
    Aa, Ab = f4_matrix_planes(A)
    Ba, Bb = f4_matrix_planes(B)
    out = (Aa @ Bb + Ab @ Ba + Ab @ Bb) & 1
    return BinMatrix.from_array(out)


def gram_trace(rows1: Sequence[Sequence[int]], rows2: Sequence[Sequence[int]], n: int) -> BinMatrix:
    """rows1 (.)_Tr rows2^T, i.e. entry (i, j) = <rows1[i], rows2[j]>."""
    return trace_mat_mul(list(rows1), f4_transpose(rows2) if rows2 else [[] for _ in range(n)],
                         inner=n)


def trace_inner(a: Sequence[int], b: Sequence[int]) -> int:
    """<a, b> = Tr(sum a_i b_i), computed in GF(4) directly."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} != {len(b)}")
    return f2_trace(euclid_inner(a, b))


# --- duals and hulls ---------------------------------------------------------------------

def trace_dual(C: AccCode) -> AccCode:
    """C^(perp_Tr) = Psi(D^perp).

    With g known the dual image is <h*> and the result keeps the conjucyclic
    generator matrix; otherwise the dual is read off the nullspace of the
    image generator matrix.
    """
    if C.g is not None:
        hstar = poly_reciprocal(C.h)
        return AccCode(C.n, _rows_from_poly(hstar, C.n, C.g.degree), hstar)
    null = C.image_matrix().nullspace()
    return AccCode.from_rows([psi_int(v, C.n) for v in null.rows], C.n)


def hull_generator(C: AccCode) -> BinPoly:
    """p(x) = lcm(g, h*), the generator of D cap D^perp."""
    g = C.require_g()
    return poly_lcm(g, poly_reciprocal(C.h))


def hull(C: AccCode) -> AccCode:
    """C cap C^(perp_Tr) as the ACC code generated by lcm(g, h*)."""
    return acc_from_gen_poly(hull_generator(C), C.n)


def hull_gram(C: AccCode) -> BinMatrix:
    """G (.)_Tr G^T for the stored generator matrix."""
    return gram_trace(C.gen_rows, C.gen_rows, C.n)


def hull_dim_via_rank(C: AccCode) -> int:
    """k - rank(G (.)_Tr G^T)."""
    return C.dim - hull_gram(C).rank()


def is_acd(C: AccCode) -> bool:
    """Additive complementary dual: det(G (.)_Tr G^T) = 1.

    The zero code counts as ACD (empty Gram matrix, determinant 1).
    """
    return hull_gram(C).det() == 1


@dataclass(frozen=True)
class DualityClass:
    self_orthogonal: bool
    dual_containing: bool
    self_dual: bool


def duality_class(C: AccCode) -> DualityClass:
    """Self-orthogonal iff G (.)_Tr G^T = 0; dual-containing iff H (.)_Tr H^T = 0."""
    H = trace_dual(C).gen_rows
    so = hull_gram(C).is_zero()
    dc = gram_trace(H, H, C.n).is_zero()
    return DualityClass(so, dc, so and dc)


@dataclass(frozen=True)
class AcpRanks:
    rank1: int
    rank2: int
    k: int
    length2: int
    gram1: BinMatrix
    gram2: BinMatrix

    @property
    def necessary_condition_met(self) -> bool:
        # only a necessary condition for (C1, C2) to be a complementary pair
        return self.rank1 == self.k and self.rank2 == self.length2 - self.k


def acp_rank_check(g1: BinPoly, n: int) -> AcpRanks:
    """Ranks of G_{eta_g1} (.)_Tr G_{eta_g1*}^T and the same for g2 = (x^2n+1)/g1."""
    mod = BinPoly.x_n_plus_1(2 * n)
    if g1.is_zero() or not g1.divides(mod):
        raise ValueError(f"{g1} does not divide x^{2 * n}+1")
    g2 = mod // g1
    k = g2.degree
    grams = []
    for g in (g1, g2):
        rows = _rows_from_poly(g, n, 2 * n - g.degree)
        rows_star = _rows_from_poly(poly_reciprocal(g), n, 2 * n - g.degree)
        grams.append(gram_trace(rows, rows_star, n))
    return AcpRanks(grams[0].rank(), grams[1].rank(), k, 2 * n, grams[0], grams[1])


def is_acp_direct(C1: AccCode, C2: AccCode) -> bool:
    """C1 cap C2 = {0} and C1 + C2 = F4^n, via the rank of the stacked images."""
    if C1.n != C2.n:
        raise ValueError("codes of different lengths")
    stacked = C1.image_matrix().vstack(C2.image_matrix())
    return C1.dim + C2.dim == 2 * C1.n and stacked.rank() == 2 * C1.n


# --- weights -----------------------------------------------------------------------------

def gray_weight(c: Sequence[int]) -> int:
    """w(0)=0, w(w)=w(w^2)=1, w(1)=2, summed; equals wt(phi_inv(c))."""
    return sum(GRAY_TABLE[x] for x in c)


def min_gray_distance(C: AccCode, max_dim: int = DEFAULT_MAX_DIM):
    """Minimum Gray weight of C = minimum Hamming weight of its binary image.

    Exhaustive over all 2^dim - 1 nonzero codewords; returns a NotComputed
    marker for the zero code or when dim > max_dim.
    """
    if C.dim == 0:
        return EMPTY_CODE
    if C.dim > max_dim:
        return beyond_bound(C.dim, max_dim)
    basis = C.image_matrix().row_basis().rows
    return min_weight_exhaustive(list(basis), 2 * C.n, max_dim)


def vec_trace(c: Sequence[int]) -> tuple:
    return tuple(TRACE_TABLE[x] for x in c)

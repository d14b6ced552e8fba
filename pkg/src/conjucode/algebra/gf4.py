"""Arithmetic in GF(4) = {0, 1, w, w^2} with w^2 = w + 1.

An element a + b*w is stored as the int ``a | (b << 1)``, so

    0 -> 0,   1 -> 1,   w -> 2,   w^2 = 1 + w -> 3.

Addition is XOR of the codes.  Vectors over GF(4) are plain tuples of these
ints.
"""

from __future__ import annotations

from typing import Iterable, Sequence

ZERO, ONE, W, W2 = 0, 1, 2, 3
ELEMENTS = (ZERO, ONE, W, W2)

F4Vector = tuple  # tuple[int, ...] of element codes


def _mul_raw(x: int, y: int) -> int:
    # (a + bw)(c + dw) = (ac + bd) + (ad + bc + bd) w, using w^2 = w + 1
    a, b = x & 1, x >> 1
    c, d = y & 1, y >> 1
    lo = (a & c) ^ (b & d)
    hi = (a & d) ^ (b & c) ^ (b & d)
    return lo | (hi << 1)


MUL_TABLE = tuple(tuple(_mul_raw(x, y) for y in ELEMENTS) for x in ELEMENTS)
CONJ_TABLE = (ZERO, ONE, W2, W)
TRACE_TABLE = (0, 0, 1, 1)
# Gray weight of a + bw is wt(a, a + b)
GRAY_TABLE = (0, 2, 1, 1)


def f4(a: int, b: int) -> int:
    """Return the element a + b*w for bits a, b."""
    return (a & 1) | ((b & 1) << 1)


def f4_add(x: int, y: int) -> int:
    return x ^ y


def f4_mul(x: int, y: int) -> int:
    return MUL_TABLE[x][y]


def f4_conj(x: int) -> int:
    """Frobenius conjugate x^2; fixes 0 and 1, swaps w and w^2."""
    return CONJ_TABLE[x]


def f2_trace(x: int) -> int:
    """Tr(x) = x + conj(x), as a bit."""
    return TRACE_TABLE[x]


def f4_inv(x: int) -> int:
    if x == ZERO:
        raise ZeroDivisionError("0 has no inverse in GF(4)")
    return f4_conj(x)


# --- vectors ---------------------------------------------------------------

def vec_add(u: Sequence[int], v: Sequence[int]) -> F4Vector:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} != {len(v)}")
    return tuple(x ^ y for x, y in zip(u, v))


def vec_trace(v: Iterable[int]) -> tuple:
    """Componentwise trace, a binary tuple."""
    return tuple(TRACE_TABLE[x] for x in v)


def vec_conj(v: Iterable[int]) -> F4Vector:
    return tuple(CONJ_TABLE[x] for x in v)


def euclid_inner(u: Sequence[int], v: Sequence[int]) -> int:
    """The Euclidean product sum(u_i v_i) in GF(4)."""
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} != {len(v)}")
    s = ZERO
    for x, y in zip(u, v):
        s ^= MUL_TABLE[x][y]
    return s


def gray_weight(v: Iterable[int]) -> int:
    return sum(GRAY_TABLE[x] for x in v)


# --- text form ---------------------------------------------------------------

_SYMBOLS = {ZERO: "0", ONE: "1", W: "w", W2: "W"}
_PARSE = {"0": ZERO, "1": ONE, "w": W, "W": W2}


def format_vector(v: Iterable[int]) -> str:
    """Comma separated symbols 0, 1, w, W (W = w^2)."""
    return ",".join(_SYMBOLS[x] for x in v)


def parse_vector(text: str) -> F4Vector:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    if not text:
        return ()
    out = []
    for pos, tok in enumerate(text.split(",")):
        tok = tok.strip()
        if tok not in _PARSE:
            raise ValueError(f"bad GF(4) symbol {tok!r} at position {pos}")
        out.append(_PARSE[tok])
    return tuple(out)

"""Minimum weight of binary linear codes.

Three routes, kept separate on purpose:

* ``min_weight_exhaustive`` walks all 2^k - 1 nonzero codewords in Gray-code
  order (one row XOR per step) inside a numba kernel;
* ``min_weight_info_sets`` is the Brouwer-Zimmermann enumeration over
  several systematic generator matrices, exact and usually far cheaper;
* ``min_weight_upper_bound`` samples random codewords and only bounds d from
  above.

Generator rows are packed ints (bit j = coordinate j).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from numba import njit

from .algebra.binmatrix import BinMatrix

DEFAULT_MAX_DIM = 24


@dataclass(frozen=True)
class NotComputed:
    """Marker returned instead of a distance."""

    reason: str

    def __bool__(self) -> bool:
        return False

    def __str__(self) -> str:
        return f"not computed ({self.reason})"


EMPTY_CODE = NotComputed("empty code")


def beyond_bound(dim: int, max_dim: int) -> NotComputed:
    return NotComputed(f"dim {dim} > max_dim {max_dim}")


def _pack_words(rows: Sequence[int], length: int) -> np.ndarray:
    nwords = max(1, (length + 63) // 64)
    out = np.zeros((len(rows), nwords), dtype=np.uint64)
    mask = (1 << 64) - 1
    for i, r in enumerate(rows):
        for w in range(nwords):
            out[i, w] = (r >> (64 * w)) & mask
    return out


@njit(cache=True)
def _popcount64(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return (x * np.uint64(0x0101010101010101)) >> np.uint64(56)


@njit(cache=True)
def _gray_min_weight(gens, stop_at):
    k, nw = gens.shape
    cur = np.zeros(nw, dtype=np.uint64)
    best = 1 << 62
    total = np.int64(1) << np.int64(k)
    for i in range(1, total):
        j = 0
        t = i
        while (t & 1) == 0:
            t >>= 1
            j += 1
        w = 0
        for q in range(nw):
            cur[q] ^= gens[j, q]
            w += np.int64(_popcount64(cur[q]))
        if w < best:
            best = w
            if best <= stop_at:
                break
    return best


def min_weight_exhaustive(rows: Sequence[int], length: int, max_dim: int = DEFAULT_MAX_DIM,
                          stop_at: int = 1):
    """Minimum nonzero weight of the span of independent ``rows``.

    Enumerates every nonzero codeword when ``len(rows) <= max_dim``;
    otherwise returns a NotComputed marker.  ``stop_at`` lets the walk end
    early once a codeword of that weight (a known lower bound) appears.
    """
    k = len(rows)
    if k == 0:
        return EMPTY_CODE
    if k > max_dim:
        return beyond_bound(k, max_dim)
    return int(_gray_min_weight(_pack_words(rows, length), stop_at))


def min_weight_bruteforce(rows: Sequence[int]) -> int | NotComputed:
    """Plain-Python enumeration of the whole codebook; a test oracle for tiny codes."""
    if not rows:
        return EMPTY_CODE
    words = {0}
    for r in rows:
        words |= {w ^ r for w in words}
    words.discard(0)
    return min(w.bit_count() for w in words)


def min_weight_upper_bound(rows: Sequence[int], length: int, samples: int = 1_000_000,
                           seed: int = 0) -> int | NotComputed:
    """Smallest weight among the generator rows and ``samples`` random
    codewords.  Only an upper bound on d."""
    if not rows:
        return EMPTY_CODE
    gens = _pack_words(rows, length)
    rng = np.random.default_rng(seed)
    best = min(r.bit_count() for r in rows)
    chunk = 1 << 14
    done = 0
    while done < samples:
        m = min(chunk, samples - done)
        coeff = rng.integers(0, 2, size=(m, len(rows)), dtype=np.uint8)
        best = min(best, int(_sampled_min(coeff, gens)))
        done += m
    return best


@njit(cache=True)
def _sampled_min(coeff, gens):
    m, k = coeff.shape
    nw = gens.shape[1]
    best = 1 << 62
    cur = np.zeros(nw, dtype=np.uint64)
    for s in range(m):
        cur[:] = 0
        nz = False
        for i in range(k):
            if coeff[s, i]:
                nz = True
                for q in range(nw):
                    cur[q] ^= gens[i, q]
        if not nz:
            continue
        w = 0
        for q in range(nw):
            w += np.int64(_popcount64(cur[q]))
        if w < best:
            best = w
    return best


# --- Brouwer-Zimmermann -----------------------------------------------------------

def _systematic_on(rows: list[int], length: int, order: Sequence[int]):
    """Row reduce with pivots chosen greedily along ``order``.

    Returns (reduced rows, pivot columns).
    """
    work = list(rows)
    pivots = []
    top = 0
    for col in order:
        bit = 1 << col
        p = next((i for i in range(top, len(work)) if work[i] & bit), None)
        if p is None:
            continue
        work[top], work[p] = work[p], work[top]
        for i in range(len(work)):
            if i != top and work[i] & bit:
                work[i] ^= work[top]
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return work[:top], pivots


@njit(cache=True)
def _combo_min(gens, t, best_in):
    """Minimum weight over all sums of exactly t rows of gens."""
    k, nw = gens.shape
    best = best_in
    idx = np.arange(t)
    # partial sums: acc[level] = sum of rows idx[0..level]
    acc = np.zeros((t + 1, nw), dtype=np.uint64)
    level = 0
    idx[0] = -1
    while level >= 0:
        idx[level] += 1
        if idx[level] > k - (t - level):
            level -= 1
            continue
        for q in range(nw):
            acc[level + 1, q] = acc[level, q] ^ gens[idx[level], q]
        if level == t - 1:
            w = 0
            for q in range(nw):
                w += np.int64(_popcount64(acc[t, q]))
            if w < best:
                best = w
        else:
            level += 1
            idx[level] = idx[level - 1]
    return best


def min_weight_info_sets(rows: Sequence[int], length: int, cyclic: bool = False) -> int | NotComputed:
    """Exact minimum distance by Brouwer-Zimmermann enumeration.

    Builds systematic generator matrices on successive (greedily chosen)
    information sets; after enumerating all combinations of <= t rows of
    every matrix, a codeword not yet seen has weight above the sum of
    (t + 1 - redundancy) over the matrices, so the search can stop as soon as
    that lower bound meets the best weight found.  With ``cyclic`` the
    information sets are consecutive windows, which are independent for
    cyclic codes.
    """
    rows = [r for r in rows if r]
    if not rows:
        return EMPTY_CODE
    k = BinMatrix(rows, length).rank()
    if k < len(rows):
        rows = list(BinMatrix(rows, length).row_basis().rows)
    mats = []
    covered: list[int] = []
    used = set()
    start = 0
    while len(used) < length:
        if cyclic:
            order = [(start + i) % length for i in range(length)]
        else:
            order = [c for c in range(length) if c not in used] + sorted(used)
        red, piv = _systematic_on(rows, length, order)
        fresh = [c for c in piv if c not in used]
        if not fresh:
            break
        mats.append(_pack_words(red, length))
        covered.append(len(fresh))
        used.update(piv)
        start = (start + k) % length
        if cyclic and len(mats) * k >= length:
            break
    best = min(r.bit_count() for r in rows)
    for t in range(1, k + 1):
        for g in mats:
            best = int(_combo_min(g, t, best))
        lower = sum(max(0, t + 1 - (k - c)) for c in covered)
        if lower >= best:
            return best
    return best

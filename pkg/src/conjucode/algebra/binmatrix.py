"""Dense GF(2) matrices with bit-packed rows.

Row r is an int whose bit j is the entry in column j.  All operations return
new matrices.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np


class BinMatrix:
    __slots__ = ("rows", "ncols")

    def __init__(self, rows: Iterable[int], ncols: int):
        rows = tuple(int(r) for r in rows)
        limit = 1 << ncols
        for r in rows:
            if r < 0 or r >= limit:
                raise ValueError(f"row {r:#x} does not fit in {ncols} columns")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("BinMatrix is immutable")

    @classmethod
    def from_lists(cls, data: Sequence[Sequence[int]], ncols: int | None = None) -> "BinMatrix":
        if ncols is None:
            ncols = len(data[0]) if len(data) else 0
        rows = []
        for row in data:
            if len(row) != ncols:
                raise ValueError("ragged matrix")
            bits = 0
            for j, v in enumerate(row):
                if int(v) & 1:
                    bits |= 1 << j
            rows.append(bits)
        return cls(rows, ncols)

    @classmethod
    def from_array(cls, arr) -> "BinMatrix":
        arr = np.asarray(arr)
        if arr.ndim != 2:
            raise ValueError("expected a 2-d array")
        return cls.from_lists(arr.tolist(), arr.shape[1])

    @classmethod
    def identity(cls, k: int) -> "BinMatrix":
        return cls([1 << i for i in range(k)], k)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BinMatrix":
        return cls([0] * nrows, ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def to_array(self) -> np.ndarray:
        return np.array(self.to_lists(), dtype=np.uint8).reshape(self.nrows, self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return (self.rows[i] >> j) & 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinMatrix):
            return NotImplemented
        return self.ncols == other.ncols and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.rows, self.ncols))

    def __repr__(self) -> str:
        body = "\n ".join("".join(str(v) for v in row) for row in self.to_lists())
        return f"BinMatrix({self.nrows}x{self.ncols}\n {body})"

    def is_zero(self) -> bool:
        return not any(self.rows)

    # -- algebra ---------------------------------------------------------------
    def transpose(self) -> "BinMatrix":
        out = [0] * self.ncols
        for i, r in enumerate(self.rows):
            j = 0
            while r:
                if r & 1:
                    out[j] |= 1 << i
                r >>= 1
                j += 1
        return BinMatrix(out, self.nrows)

    @property
    def T(self) -> "BinMatrix":
        return self.transpose()

    def __add__(self, other: "BinMatrix") -> "BinMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return BinMatrix((a ^ b for a, b in zip(self.rows, other.rows)), self.ncols)

    def __matmul__(self, other: "BinMatrix") -> "BinMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        orows = other.rows
        out = []
        for r in self.rows:
            acc = 0
            j = 0
            while r:
                if r & 1:
                    acc ^= orows[j]
                r >>= 1
                j += 1
            out.append(acc)
        return BinMatrix(out, other.ncols)

    def mul_vec(self, v: int) -> int:
        """M v^T for a packed vector v, returned packed over the rows."""
        out = 0
        for i, r in enumerate(self.rows):
            if (r & v).bit_count() & 1:
                out |= 1 << i
        return out

    def vstack(self, other: "BinMatrix") -> "BinMatrix":
        if self.ncols != other.ncols:
            raise ValueError("column count mismatch")
        return BinMatrix(self.rows + other.rows, self.ncols)

    # -- elimination -------------------------------------------------------------
    def _eliminate(self) -> tuple[list[int], list[int]]:
        """Reduced row echelon rows (nonzero only) and their pivot columns."""
        work = [r for r in self.rows if r]
        pivots: list[int] = []
        top = 0
        for col in range(self.ncols):
            bit = 1 << col
            p = next((i for i in range(top, len(work)) if work[i] & bit), None)
            if p is None:
                continue
            work[top], work[p] = work[p], work[top]
            prow = work[top]
            for i in range(len(work)):
                if i != top and work[i] & bit:
                    work[i] ^= prow
            pivots.append(col)
            top += 1
            if top == len(work):
                break
        return work[:top], pivots

    def rref(self) -> "BinMatrix":
        """Reduced row echelon form, zero rows kept at the bottom."""
        rows, _ = self._eliminate()
        return BinMatrix(rows + [0] * (self.nrows - len(rows)), self.ncols)

    def row_basis(self) -> "BinMatrix":
        """RREF with zero rows dropped; a canonical basis of the row space."""
        rows, _ = self._eliminate()
        return BinMatrix(rows, self.ncols)

    def rank(self) -> int:
        return len(self._eliminate()[0])

    def nullspace(self) -> "BinMatrix":
        """Basis (as rows) of {v : M v^T = 0}."""
        rows, pivots = self._eliminate()
        pivset = set(pivots)
        basis = []
        for free in range(self.ncols):
            if free in pivset:
                continue
            v = 1 << free
            for r, pc in zip(rows, pivots):
                if (r >> free) & 1:
                    v |= 1 << pc
            basis.append(v)
        return BinMatrix(basis, self.ncols)

    def det(self) -> int:
        if self.nrows != self.ncols:
            raise ValueError(f"determinant of a non-square {self.shape} matrix")
        return 1 if self.rank() == self.nrows else 0

    def contains_row(self, v: int) -> bool:
        """Whether v lies in the row space."""
        rows, pivots = self._eliminate()
        for r, pc in zip(rows, pivots):
            if (v >> pc) & 1:
                v ^= r
        return v == 0

    def same_row_space(self, other: "BinMatrix") -> bool:
        return self.ncols == other.ncols and self.row_basis() == other.row_basis()


def mat_rank(m: BinMatrix) -> int:
    return m.rank()


def mat_nullspace(m: BinMatrix) -> BinMatrix:
    return m.nullspace()


def mat_det(m: BinMatrix) -> int:
    return m.det()


def random_matrix(rng: np.random.Generator, nrows: int, ncols: int) -> BinMatrix:
    return BinMatrix.from_array(rng.integers(0, 2, size=(nrows, ncols)))

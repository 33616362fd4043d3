"""Exact matrices over Q(i) and kernel computation.

Rank and kernel are computed by exact Gauss-Jordan elimination on sparse
rows. The default pivot choice is sparsity-first (fewest nonzeros, ties
by index) which keeps fill-in low on the very sparse differentials this
package produces; a sequential strategy exists so tests can confirm the
rank is pivot-order independent.
"""
from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .scalars import ONE, ZERO, GaussianRational

Vector = tuple[GaussianRational, ...]


class ExactMatrix:
    """Immutable dense matrix over Q(i); may have zero rows or columns."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: Iterable[Iterable[GaussianRational]]):
        rows_t = tuple(tuple(r) for r in rows)
        if len(rows_t) != nrows or any(len(r) != ncols for r in rows_t):
            raise ValueError("row data does not match the declared shape")
        object.__setattr__(self, "nrows", nrows)
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "rows", rows_t)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    # -- constructors --------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[GaussianRational]]) -> "ExactMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        return cls(nrows, ncols, rows)

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "ExactMatrix":
        return cls(nrows, ncols, [[ZERO] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(
            n, n, [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        )

    @classmethod
    def from_entries(
        cls, nrows: int, ncols: int, entries: Mapping[tuple[int, int], GaussianRational]
    ) -> "ExactMatrix":
        data = [[ZERO] * ncols for _ in range(nrows)]
        for (i, j), v in entries.items():
            data[i][j] = v
        return cls(nrows, ncols, data)

    # -- algebra --------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.nrows, self.ncols, self.rows))

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._shape_check(other)
        return ExactMatrix(
            self.nrows,
            self.ncols,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._shape_check(other)
        return ExactMatrix(
            self.nrows,
            self.ncols,
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
        )

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(
            self.nrows, self.ncols, [[-a for a in r] for r in self.rows]
        )

    def scale(self, scalar: GaussianRational) -> "ExactMatrix":
        return ExactMatrix(
            self.nrows, self.ncols, [[scalar * a for a in r] for r in self.rows]
        )

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise ValueError("inner dimensions disagree")
        cols = other.ncols
        out = []
        for row in self.rows:
            acc = [ZERO] * cols
            for k, a in enumerate(row):
                if not a:
                    continue
                orow = other.rows[k]
                for j in range(cols):
                    b = orow[j]
                    if b:
                        acc[j] = acc[j] + a * b
            out.append(acc)
        return ExactMatrix(self.nrows, cols, out)

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            return self @ other
        return NotImplemented

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.ncols,
            self.nrows,
            [
                [self.rows[i][j] for i in range(self.nrows)]
                for j in range(self.ncols)
            ],
        )

    def apply(self, vec: Sequence[GaussianRational]) -> Vector:
        if len(vec) != self.ncols:
            raise ValueError("vector length does not match column count")
        out = []
        for row in self.rows:
            acc = ZERO
            for a, x in zip(row, vec):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return tuple(out)

    def entry(self, i: int, j: int) -> GaussianRational:
        return self.rows[i][j]

    def is_zero(self) -> bool:
        return all(not a for row in self.rows for a in row)

    def trace(self) -> GaussianRational:
        if self.nrows != self.ncols:
            raise ValueError("trace of a non-square matrix")
        t = ZERO
        for i in range(self.nrows):
            t = t + self.rows[i][i]
        return t

    def power(self, k: int) -> "ExactMatrix":
        if self.nrows != self.ncols:
            raise ValueError("power of a non-square matrix")
        result = ExactMatrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base_needed = k >> 1
            if base_needed:
                base = base @ base
            k = base_needed
        return result

    def is_nilpotent(self) -> bool:
        return self.power(self.nrows).is_zero() if self.nrows else True

    def _shape_check(self, other: "ExactMatrix"):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError("matrix shapes disagree")

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols})"


def _sparse_rows(matrix: ExactMatrix) -> list[dict[int, GaussianRational]]:
    return [
        {j: a for j, a in enumerate(row) if a} for row in matrix.rows
    ]


def _eliminate(
    matrix: ExactMatrix, pivot_strategy: str
) -> tuple[list[tuple[int, dict[int, GaussianRational]]], list[int]]:
    """Gauss-Jordan elimination; returns (pivot rows, pivot columns).

    Each returned row is fully reduced: its pivot column occurs in no
    other returned row.
    """
    rows = [r for r in _sparse_rows(matrix) if r]
    done: list[tuple[int, dict[int, GaussianRational]]] = []
    while rows:
        if pivot_strategy == "sparsity":
            # Fewest nonzeros first; break ties on the smallest column index.
            ridx = min(range(len(rows)), key=lambda i: (len(rows[i]), i))
            row = rows.pop(ridx)
            col_count: dict[int, int] = {}
            for r in rows:
                for c in r:
                    if c in row:
                        col_count[c] = col_count.get(c, 0) + 1
            pivot_col = min(row, key=lambda c: (col_count.get(c, 0), c))
        elif pivot_strategy == "sequential":
            row = rows.pop(0)
            pivot_col = min(row)
        else:
            raise ValueError(f"unknown pivot strategy {pivot_strategy!r}")
        inv = row[pivot_col].inverse()
        row = {c: inv * a for c, a in row.items()}
        # Reduce both the remaining rows and the finished ones, so every
        # pivot column survives in exactly one row (Jordan form rows).
        new_rows = []
        for r in rows:
            coeff = r.get(pivot_col)
            if coeff:
                r = _row_axpy(r, row, -coeff)
            if r:
                new_rows.append(r)
        rows = new_rows
        new_done = []
        for pc, r in done:
            coeff = r.get(pivot_col)
            if coeff:
                r = _row_axpy(r, row, -coeff)
            new_done.append((pc, r))
        done = new_done
        done.append((pivot_col, row))
    pivot_cols = [pc for pc, _ in done]
    return done, pivot_cols


def _row_axpy(
    target: dict[int, GaussianRational],
    source: dict[int, GaussianRational],
    factor: GaussianRational,
) -> dict[int, GaussianRational]:
    out = dict(target)
    for c, a in source.items():
        v = out.get(c, ZERO) + factor * a
        if v:
            out[c] = v
        else:
            out.pop(c, None)
    return out


def rank_and_kernel(
    matrix: ExactMatrix, pivot_strategy: str = "sparsity"
) -> tuple[int, tuple[Vector, ...]]:
    """Exact rank and a kernel basis.

    Postconditions asserted here: rank + nullity == ncols, and the matrix
    annihilates every returned kernel vector.
    """
    done, pivot_cols = _eliminate(matrix, pivot_strategy)
    rank = len(done)
    pivot_set = set(pivot_cols)
    free_cols = [c for c in range(matrix.ncols) if c not in pivot_set]
    kernel: list[Vector] = []
    for f in free_cols:
        vec = [ZERO] * matrix.ncols
        vec[f] = ONE
        for pc, row in done:
            coeff = row.get(f)
            if coeff:
                vec[pc] = -coeff
        kernel.append(tuple(vec))
    assert rank + len(kernel) == matrix.ncols
    for vec in kernel:
        image = matrix.apply(vec)
        assert all(not a for a in image), "kernel vector not annihilated"
    return rank, tuple(kernel)


def rank(matrix: ExactMatrix, pivot_strategy: str = "sparsity") -> int:
    return rank_and_kernel(matrix, pivot_strategy)[0]


def matrix_inverse(matrix: ExactMatrix) -> ExactMatrix:
    """Exact inverse by Gauss-Jordan on the augmented matrix."""
    if matrix.nrows != matrix.ncols:
        raise ValueError("inverse of a non-square matrix")
    n = matrix.nrows
    aug = [list(row) + [ONE if i == j else ZERO for j in range(n)]
           for i, row in enumerate(matrix.rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [inv * a for a in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return ExactMatrix(n, n, [row[n:] for row in aug])


class SpanTracker:
    """Incremental row-space membership with exact reduction.

    add() returns True when the vector enlarges the span; the reduced
    nonzero remainder is kept in fully reduced form.
    """

    def __init__(self, width: int):
        self.width = width
        self.rows: list[tuple[int, dict[int, GaussianRational]]] = []

    def reduce(self, vec: Sequence[GaussianRational]) -> dict[int, GaussianRational]:
        current = {j: a for j, a in enumerate(vec) if a}
        for pc, row in self.rows:
            coeff = current.get(pc)
            if coeff:
                current = _row_axpy(current, row, -coeff)
        return current

    def add(self, vec: Sequence[GaussianRational]) -> bool:
        current = self.reduce(vec)
        if not current:
            return False
        pivot_col = min(current)
        inv = current[pivot_col].inverse()
        current = {c: inv * a for c, a in current.items()}
        new_rows = []
        for pc, row in self.rows:
            coeff = row.get(pivot_col)
            if coeff:
                row = _row_axpy(row, current, -coeff)
            new_rows.append((pc, row))
        new_rows.append((pivot_col, current))
        self.rows = new_rows
        return True

    def contains(self, vec: Sequence[GaussianRational]) -> bool:
        return not self.reduce(vec)

    @property
    def dim(self) -> int:
        return len(self.rows)

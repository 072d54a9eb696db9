"""Exact rational linear algebra.

Every axiom check in this package reduces to an identity between rational
tensors, every cohomology space to a kernel, and every triviality question
to exact solvability.  The substrate is therefore deliberately small:
immutable dense matrices over ``fractions.Fraction``, Gaussian elimination
with exact pivots, kernels, and span membership.  Dimensions stay around a
dozen; there is no floating point and no rounding anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

from .errors import InputError

F0 = Fraction(0)
F1 = Fraction(1)

Vec = tuple  # tuple of Fraction


def rat(x) -> Fraction:
    """Coerce an int, string ("p/q" or "p") or Fraction to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational literal {x!r}: {exc}") from None
    raise InputError(f"cannot interpret {type(x).__name__} as a rational")


def vec(xs: Iterable) -> Vec:
    return tuple(rat(x) for x in xs)


def zero_vec(n: int) -> Vec:
    return (F0,) * n


def vadd(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vsub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vneg(a: Vec) -> Vec:
    return tuple(-x for x in a)


def vscale(c: Fraction, a: Vec) -> Vec:
    if c == 0:
        return zero_vec(len(a))
    return tuple(c * x for x in a)


def is_zero_vec(a: Vec) -> bool:
    return all(x == 0 for x in a)


class Matrix:
    """Immutable dense matrix of Fractions, stored as row tuples."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data):
        rows_t = tuple(tuple(rat(x) for x in row) for row in data)
        if len(rows_t) != rows or any(len(r) != cols for r in rows_t):
            raise InputError(f"matrix data does not have shape {rows}x{cols}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", rows_t)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, data) -> "Matrix":
        data = [list(row) for row in data]
        if not data:
            raise InputError("matrix needs at least one row; use zeros() for empty shapes")
        return cls(len(data), len(data[0]), data)

    @classmethod
    def from_columns(cls, columns: Sequence[Vec], rows: int | None = None) -> "Matrix":
        cols = len(columns)
        if cols == 0:
            if rows is None:
                raise InputError("from_columns with no columns needs an explicit row count")
            return cls.zeros(rows, 0)
        n = len(columns[0])
        if any(len(c) != n for c in columns):
            raise InputError("columns have differing lengths")
        return cls(n, cols, [[columns[j][i] for j in range(cols)] for i in range(n)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [[F1 if i == j else F0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [[F0] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, entries) -> "Matrix":
        entries = vec(entries)
        n = len(entries)
        return cls(n, n, [[entries[i] if i == j else F0 for j in range(n)] for i in range(n)])

    # -- access ------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> Vec:
        return self.data[i]

    def column(self, j: int) -> Vec:
        return tuple(r[j] for r in self.data)

    def columns(self) -> list[Vec]:
        return [self.column(j) for j in range(self.cols)]

    # -- algebra -----------------------------------------------------------

    def apply(self, v: Vec) -> Vec:
        """Matrix-vector product, skipping zero coefficients."""
        if len(v) != self.cols:
            raise InputError(f"vector length {len(v)} != cols {self.cols}")
        out = [F0] * self.rows
        for j, c in enumerate(v):
            if c == 0:
                continue
            for i in range(self.rows):
                a = self.data[i][j]
                if a != 0:
                    out[i] += a * c
        return tuple(out)

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise InputError(f"cannot multiply {self.shape()} by {other.shape()}")
        data = [[F0] * other.cols for _ in range(self.rows)]
        for i in range(self.rows):
            ri = self.data[i]
            for k in range(self.cols):
                a = ri[k]
                if a == 0:
                    continue
                rk = other.data[k]
                row = data[i]
                for j in range(other.cols):
                    b = rk[j]
                    if b != 0:
                        row[j] += a * b
        return Matrix(self.rows, other.cols, data)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols,
                      [[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols,
                      [[a - b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [[-a for a in r] for r in self.data])

    def scale(self, c) -> "Matrix":
        c = rat(c)
        return Matrix(self.rows, self.cols, [[c * a for a in r] for r in self.data])

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def power(self, k: int) -> "Matrix":
        if self.rows != self.cols:
            raise InputError("power of a non-square matrix")
        if k < 0:
            raise InputError("negative matrix power")
        out = Matrix.identity(self.rows)
        for _ in range(k):
            out = out * self
        return out

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise InputError("trace of a non-square matrix")
        return sum((self.data[i][i] for i in range(self.rows)), F0)

    # -- predicates ----------------------------------------------------------

    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_zero(self) -> bool:
        return all(a == 0 for r in self.data for a in r)

    def is_identity(self) -> bool:
        return self.rows == self.cols and all(
            self.data[i][j] == (F1 if i == j else F0)
            for i in range(self.rows) for j in range(self.cols))

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self == self.transpose()

    def is_skew(self) -> bool:
        return self.rows == self.cols and all(
            self.data[i][j] == -self.data[j][i]
            for i in range(self.rows) for j in range(i, self.cols))

    def _same_shape(self, other: "Matrix"):
        if self.shape() != other.shape():
            raise InputError(f"shape mismatch: {self.shape()} vs {other.shape()}")

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.shape() == other.shape()
                and self.data == other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        body = "; ".join(" ".join(str(a) for a in r) for r in self.data)
        return f"Matrix({self.rows}x{self.cols}: {body})"


def _rref(rows: list[list[Fraction]], ncols: int) -> list[int]:
    """Reduce rows in place to reduced row echelon form; return pivot columns."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        if pv != 1:
            rows[r] = [x / pv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rank_and_kernel(m: Matrix) -> tuple[int, list[Vec]]:
    """Rank of m and a basis of its right kernel (exact).

    rank + len(kernel) == m.cols, every kernel vector v satisfies m·v = 0,
    and the kernel vectors are linearly independent by construction (each
    has a 1 in a distinct free column).
    """
    rows = [list(r) for r in m.data]
    pivots = _rref(rows, m.cols)
    rank = len(pivots)
    pivot_set = set(pivots)
    kernel: list[Vec] = []
    for j in range(m.cols):
        if j in pivot_set:
            continue
        v = [F0] * m.cols
        v[j] = F1
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][j]
        kernel.append(tuple(v))
    return rank, kernel


def rank(m: Matrix) -> int:
    return rank_and_kernel(m)[0]


def solve_linear(m: Matrix, b: Vec) -> Vec | None:
    """One exact solution x of m·x = b, or None iff b is outside the column space.

    Free variables are set to zero, so the result is deterministic.
    """
    if len(b) != m.rows:
        raise InputError(f"rhs length {len(b)} != rows {m.rows}")
    rows = [list(r) + [rat(x)] for r, x in zip(m.data, b)]
    pivots = _rref(rows, m.cols)
    for r in range(len(pivots), m.rows):
        if rows[r][m.cols] != 0:
            return None
    x = [F0] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][m.cols]
    return tuple(x)


def in_span(vectors: Sequence[Vec], target: Vec) -> bool:
    """True iff target is a rational linear combination of the given vectors."""
    if not vectors:
        return is_zero_vec(target)
    n = len(vectors[0])
    if any(len(v) != n for v in vectors) or len(target) != n:
        raise InputError("in_span: vectors must all have the same length")
    return solve_linear(Matrix.from_columns(list(vectors)), tuple(rat(x) for x in target)) is not None


def inverse(m: Matrix) -> Matrix:
    """Exact inverse; raises InputError when m is singular."""
    if m.rows != m.cols:
        raise InputError("inverse of a non-square matrix")
    n = m.rows
    rows = [list(r) + [F1 if i == j else F0 for j in range(n)] for i, r in enumerate(m.data)]
    pivots = _rref(rows, n)
    if len(pivots) != n:
        raise InputError("matrix is singular")
    return Matrix(n, n, [r[n:] for r in rows])


def det_of(rows: Sequence[Vec]) -> Fraction:
    """Determinant of a small square array given as row vectors (permutation expansion)."""
    k = len(rows)
    if k == 0:
        return F1
    if any(len(r) != k for r in rows):
        raise InputError("det_of needs a square array")
    total = F0
    for perm in permutations(range(k)):
        term = F1
        for i, j in enumerate(perm):
            a = rows[i][j]
            if a == 0:
                term = F0
                break
            term *= a
        if term == 0:
            continue
        inversions = sum(1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j])
        total += -term if inversions % 2 else term
    return total

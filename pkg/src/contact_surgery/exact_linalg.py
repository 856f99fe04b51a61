"""Exact integer and rational linear algebra.

Everything here works on Python integers and :class:`fractions.Fraction`;
there is no floating point.  Matrices are small (tens of rows), so the
algorithms favour clarity over asymptotics:

* :func:`det` uses fraction-free Bareiss elimination,
* :func:`solve` is Gauss-Jordan elimination over the rationals,
* :func:`smith_normal_form` is row/column reduction with smallest-pivot
  selection, tracking the unimodular transforms,
* :func:`signature` diagonalises by congruence (Sylvester's law of inertia).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError, SingularMatrixError

Rat = Fraction


class IntMatrix:
    """Immutable integer matrix.

    Indexing with ``m[i, j]`` is 0-based; the documentation of the
    topological modules numbers components from 1 as in the figures.
    """

    __slots__ = ("_rows", "_ncols")

    def __init__(self, rows: Iterable[Iterable[int]], ncols: int | None = None):
        data = tuple(tuple(int(x) for x in row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise DimensionError("ragged rows")
            if ncols is not None and ncols != width:
                raise DimensionError("ncols does not match row length")
        else:
            width = ncols or 0
        self._rows = data
        self._ncols = width

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls([[0] * cols for _ in range(rows)], ncols=cols)

    @property
    def rows(self) -> int:
        return len(self._rows)

    @property
    def cols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        n = self.rows
        return self.is_square() and all(
            self._rows[i][j] == self._rows[j][i] for i in range(n) for j in range(i + 1, n)
        )

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self._rows[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._rows[i]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._rows]

    def transpose(self) -> IntMatrix:
        return IntMatrix(zip(*self._rows), ncols=self.rows) if self.rows else IntMatrix([], ncols=0)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.column(j) for j in range(other.cols)]
        return IntMatrix(
            ([sum(a * b for a, b in zip(r, c)) for c in cols] for r in self._rows),
            ncols=other.cols,
        )

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self._rows)

    def apply(self, vec: Sequence) -> list:
        """Matrix-vector product; works for int or Fraction entries."""
        if len(vec) != self.cols:
            raise DimensionError(f"vector of length {len(vec)} for {self.shape} matrix")
        return [sum((a * v for a, v in zip(r, vec)), 0) for r in self._rows]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.shape, self._rows))

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r})"


def as_matrix(a: IntMatrix | Sequence[Sequence[int]]) -> IntMatrix:
    return a if isinstance(a, IntMatrix) else IntMatrix(a)


def _require_square(a: IntMatrix, what: str) -> None:
    if not a.is_square():
        raise DimensionError(f"{what} needs a square matrix, got {a.rows}x{a.cols}")


def det(a: IntMatrix | Sequence[Sequence[int]]) -> int:
    """Determinant by Bareiss fraction-free elimination.

    Every intermediate division is exact (Sylvester's identity), so the
    computation stays in the integers throughout.  The 0x0 determinant is 1.
    """
    a = as_matrix(a)
    _require_square(a, "det")
    n = a.rows
    m = a.tolist()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pivot - m[i][k] * m[k][j]
                assert num % prev == 0
                m[i][j] = num // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1] if n else 1


def solve(a: IntMatrix | Sequence[Sequence[int]], b: Sequence) -> list[Fraction]:
    """Exact solution of ``a x = b`` over the rationals.

    Raises :class:`SingularMatrixError` when ``a`` is singular.
    """
    a = as_matrix(a)
    _require_square(a, "solve")
    n = a.rows
    if len(b) != n:
        raise DimensionError(f"right-hand side has length {len(b)}, expected {n}")
    aug = [[Fraction(x) for x in a.row(i)] + [Fraction(b[i])] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        pr = aug[col]
        support = [j for j in range(col, n + 1) if pr[j]]  # linking matrices are sparse
        p = pr[col]
        if p != 1:
            for j in support:
                pr[j] /= p
        for r in range(n):
            f = aug[r][col]
            if r != col and f != 0:
                row = aug[r]
                for j in support:
                    row[j] -= f * pr[j]
    return [aug[i][n] for i in range(n)]


def inverse_row(a: IntMatrix, i: int) -> list[Fraction]:
    """Row ``i`` (0-based) of ``a^{-1}``; for symmetric ``a`` this is column ``i``."""
    n = a.rows
    e = [int(k == i) for k in range(n)]
    return solve(a.transpose(), e)


@dataclass(frozen=True)
class SNFResult:
    """``left @ A @ right == diag(diagonal)`` padded with zeros to A's shape."""

    diagonal: tuple[int, ...]
    left: IntMatrix
    right: IntMatrix

    def diagonal_matrix(self, rows: int, cols: int) -> IntMatrix:
        d = [[0] * cols for _ in range(rows)]
        for i, x in enumerate(self.diagonal):
            d[i][i] = x
        return IntMatrix(d, ncols=cols)


def smith_normal_form(a: IntMatrix | Sequence[Sequence[int]]) -> SNFResult:
    """Smith normal form with unimodular transforms.

    The returned diagonal has length ``min(rows, cols)``: non-negative
    integers ``d1 | d2 | ... | dr`` followed by zeros.
    """
    a = as_matrix(a)
    nr, nc = a.shape
    m = a.tolist()
    left = IntMatrix.identity(nr).tolist()
    right = IntMatrix.identity(nc).tolist()

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]
        for row in right:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):
        # row_dst += f * row_src
        m[dst] = [x + f * y for x, y in zip(m[dst], m[src])]
        left[dst] = [x + f * y for x, y in zip(left[dst], left[src])]

    def add_col(dst, src, f):
        for row in m:
            row[dst] += f * row[src]
        for row in right:
            row[dst] += f * row[src]

    for t in range(min(nr, nc)):
        while True:
            entries = [(abs(m[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if m[i][j]]
            if not entries:
                break
            _, pi, pj = min(entries)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = m[t][t]
            dirty = False
            for i in range(t + 1, nr):
                if m[i][t]:
                    add_row(i, t, -(m[i][t] // p))
                    dirty = dirty or m[i][t] != 0
            for j in range(t + 1, nc):
                if m[t][j]:
                    add_col(j, t, -(m[t][j] // p))
                    dirty = dirty or m[t][j] != 0
            if dirty:
                continue
            # pivot must divide the remaining block
            bad = next(
                (i for i in range(t + 1, nr) for j in range(t + 1, nc) if m[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if m[t][t] < 0:
            m[t] = [-x for x in m[t]]
            left[t] = [-x for x in left[t]]

    diag = tuple(m[i][i] for i in range(min(nr, nc)))
    return SNFResult(diag, IntMatrix(left, ncols=nr), IntMatrix(right, ncols=nc))


def rank(a: IntMatrix | Sequence[Sequence[int]]) -> int:
    return sum(1 for d in smith_normal_form(a).diagonal if d)


def signature(a: IntMatrix | Sequence[Sequence[int]]) -> int:
    """Signature (n_+ - n_-) of a symmetric integer matrix.

    Congruence reduction over the rationals.  A non-zero diagonal pivot
    splits off a 1x1 block of its sign; when the whole remaining diagonal
    vanishes, any non-zero off-diagonal entry ``b`` spans a hyperbolic
    block ``[[0, b], [b, d]]`` (determinant ``-b^2 < 0``) which contributes
    one positive and one negative square and is split off by its Schur
    complement.
    """
    a = as_matrix(a)
    if not a.is_symmetric():
        raise DimensionError("signature needs a symmetric matrix")
    m = [[Fraction(x) for x in r] for r in a.tolist()]
    sig = 0
    while m:
        n = len(m)
        piv = next((i for i in range(n) if m[i][i] != 0), None)
        if piv is not None:
            p = m[piv][piv]
            sig += 1 if p > 0 else -1
            rest = [i for i in range(n) if i != piv]
            m = [
                [m[i][j] - m[i][piv] * m[piv][j] / p for j in rest] if m[i][piv] else [m[i][j] for j in rest]
                for i in rest
            ]
            continue
        pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if m[i][j] != 0), None)
        if pair is None:
            break  # zero matrix: remaining eigenvalues all vanish
        i, j = pair
        b, d = m[i][j], m[j][j]
        # inverse of [[0, b], [b, d]] is [[-d, b], [b, 0]] / b^2
        inv = [[-d / (b * b), 1 / b], [1 / b, Fraction(0)]]
        blk = (i, j)
        rest = [k for k in range(n) if k not in blk]
        m = [
            [
                m[r][c] - sum(m[r][blk[s]] * inv[s][t] * m[blk[t]][c] for s in range(2) for t in range(2))
                for c in rest
            ]
            for r in rest
        ]
    return sig


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise DimensionError("vectors of different length")
    return sum((x * y for x, y in zip(u, v)), 0)


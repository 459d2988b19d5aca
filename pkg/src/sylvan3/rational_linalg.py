"""Exact rational matrices.

Scalars are :class:`fractions.Fraction`, which already keeps values reduced
with a positive denominator.  Matrices are small and dense, so everything is
plain Python lists and tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Rat = Fraction


class NoSolution(ArithmeticError):
    """The linear system is inconsistent."""


class NotUnique(ArithmeticError):
    """The linear system has more than one solution."""


def rat(value) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-5/9"`` to a Fraction."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def format_rat(q: Fraction) -> str:
    """Render as ``"p/q"``, or ``"p"`` when the denominator is one."""
    q = rat(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class RatMatrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ncols: int | None = None) -> "RatMatrix":
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(rat(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[Fraction]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def col(self, j: int) -> list[Fraction]:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self) -> list[list[Fraction]]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "RatMatrix":
        return RatMatrix.from_rows([self.col(j) for j in range(self.cols)], self.rows)

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "RatMatrix":
        rows, cols = list(rows), list(cols)
        return RatMatrix.from_rows([[self[i, j] for j in cols] for i in rows], len(cols))

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = [
            [sum((self[i, t] * other[t, j] for t in range(self.cols)), Fraction(0))
             for j in range(other.cols)]
            for i in range(self.rows)
        ]
        return RatMatrix.from_rows(out, other.cols)

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return RatMatrix(self.rows, self.cols,
                         tuple(a + b for a, b in zip(self.entries, other.entries)))

    def apply(self, vec: Sequence) -> list[Fraction]:
        if len(vec) != self.cols:
            raise ValueError("shape mismatch")
        return [sum((self[i, j] * vec[j] for j in range(self.cols)), Fraction(0))
                for i in range(self.rows)]

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def hstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.rows != other.rows:
            raise ValueError("shape mismatch")
        return RatMatrix.from_rows(
            [self.row(i) + other.row(i) for i in range(self.rows)], self.cols + other.cols
        )


def _integer_rows(M: RatMatrix) -> list[list[int]]:
    """Scale each row by the lcm of its denominators."""
    out = []
    for i in range(M.rows):
        row = M.row(i)
        d = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * d) for x in row])
    return out


def _bareiss(a: list[list[int]]) -> tuple[int, int]:
    """Fraction-free elimination in place.

    Returns ``(rank, det_sign_and_value)`` where the second entry is the last
    leading principal pivot (the determinant when the matrix is square and
    nonsingular, up to the tracked row-swap sign).
    """
    n_rows = len(a)
    n_cols = len(a[0]) if a else 0
    prev = 1
    sign = 1
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        piv = next((t for t in range(r, n_rows) if a[t][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
            sign = -sign
        for t in range(r + 1, n_rows):
            for u in range(c + 1, n_cols):
                a[t][u] = (a[t][u] * a[r][c] - a[t][c] * a[r][u]) // prev
            a[t][c] = 0
        prev = a[r][c]
        r += 1
    return r, sign * prev


def rank(M: RatMatrix) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    r, _ = _bareiss(_integer_rows(M))
    return r


def int_determinant(M: Sequence[Sequence[int]] | RatMatrix) -> int:
    if isinstance(M, RatMatrix):
        if any(x.denominator != 1 for x in M.entries):
            raise ValueError("matrix has non-integer entries")
        a = [[int(x) for x in M.row(i)] for i in range(M.rows)]
    else:
        a = [[int(x) for x in row] for row in M]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    r, d = _bareiss(a)
    return d if r == n else 0


def rref(M: RatMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q and the pivot columns."""
    a = M.to_rows()
    pivots = []
    r = 0
    for c in range(M.cols):
        piv = next((t for t in range(r, M.rows) if a[t][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for t in range(M.rows):
            if t != r and a[t][c] != 0:
                f = a[t][c]
                a[t] = [x - f * y for x, y in zip(a[t], a[r])]
        pivots.append(c)
        r += 1
        if r == M.rows:
            break
    return a[:r], pivots


def solve_unique(M: RatMatrix, rhs: Sequence) -> list[Fraction]:
    """Solve ``M x = rhs``.

    Raises :class:`NoSolution` if inconsistent and :class:`NotUnique` if the
    solution set has positive dimension (checked in that order).
    """
    if len(rhs) != M.rows:
        raise ValueError("rhs length does not match row count")
    aug = M.hstack(RatMatrix.from_rows([[v] for v in rhs], 1)) if M.rows else None
    if aug is None:
        if M.cols:
            raise NotUnique("empty system with free variables")
        return []
    reduced, pivots = rref(aug)
    if M.cols in pivots:
        raise NoSolution("inconsistent system")
    if len(pivots) < M.cols:
        raise NotUnique(f"{M.cols - len(pivots)} free variable(s)")
    x = [Fraction(0)] * M.cols
    for row, c in zip(reduced, pivots):
        x[c] = row[M.cols]
    return x


def kernel(M: RatMatrix) -> list[list[Fraction]]:
    """Basis of the right null space, one vector per free column, in RREF order."""
    if M.cols == 0:
        return []
    if M.rows == 0:
        return [[Fraction(int(i == j)) for i in range(M.cols)] for j in range(M.cols)]
    reduced, pivots = rref(M)
    free = [c for c in range(M.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * M.cols
        v[f] = Fraction(1)
        for row, c in zip(reduced, pivots):
            v[c] = -row[f]
        basis.append(v)
    return basis


def in_column_space(M: RatMatrix, vec: Sequence) -> bool:
    if M.cols == 0:
        return all(v == 0 for v in vec)
    return rank(M) == rank(M.hstack(RatMatrix.from_rows([[v] for v in vec], 1)))


def gcd_of_maximal_minors(rows: Sequence[Sequence[int]], size: int) -> int:
    """gcd of all ``size x size`` minors of an integer matrix (0 if none are nonzero)."""
    from itertools import combinations

    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    if size == 0:
        return 1
    g = 0
    for rsel in combinations(range(n_rows), size):
        for csel in combinations(range(n_cols), size):
            g = gcd(g, int_determinant([[rows[i][j] for j in csel] for i in rsel]))
            if g == 1:
                return 1
    return g

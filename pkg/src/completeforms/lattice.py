"""Exact integer and rational linear algebra.

Everything here runs on Python ints and :class:`fractions.Fraction`; there is
no floating point anywhere.  The two workhorses are :func:`smith_normal_form`,
which returns the full ``(U, D, V)`` transform data, and :func:`cokernel`,
which turns a relation matrix into a finitely generated abelian group
descriptor.  Rational solving is deliberately strict: a system with a
positive-dimensional solution space raises instead of picking a point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, UnderDetermined

__all__ = [
    "IntegerMatrix",
    "RationalVector",
    "AbelianGroupDescriptor",
    "SmithNormalForm",
    "smith_normal_form",
    "cokernel",
    "solve_rational",
]


@dataclass(frozen=True)
class IntegerMatrix:
    """Immutable dense matrix with integer entries, stored row major."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.entries:
            width = len(self.entries[0])
            for row in self.entries:
                if len(row) != width:
                    raise DimensionMismatch("ragged rows in matrix literal")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntegerMatrix":
        data = []
        for row in rows:
            out = []
            for x in row:
                if not isinstance(x, int):
                    raise TypeError("integer matrix entries must be ints, got %r" % (x,))
                out.append(x)
            data.append(tuple(out))
        return cls(tuple(data))

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(tuple(tuple(0 for _ in range(cols)) for _ in range(rows)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(tuple(zip(*self.entries))) if self.entries else self

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(
                "cannot multiply %dx%d by %dx%d" % (self.rows, self.cols, other.rows, other.cols)
            )
        ot = other.transpose().entries
        return IntegerMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in ot)
                for row in self.entries
            )
        )

    def determinant(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination.

        >>> IntegerMatrix.from_rows([[2, 0], [1, 3]]).determinant()
        6
        """
        if self.rows != self.cols:
            raise DimensionMismatch("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [list(row) for row in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def __str__(self) -> str:
        return "\n".join("[" + " ".join(str(x) for x in row) + "]" for row in self.entries)


def _coerce_fraction(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floats are not accepted, use Fraction or int")
    return Fraction(x)


@dataclass(frozen=True)
class RationalVector:
    """Immutable vector of exact rationals."""

    values: tuple[Fraction, ...]

    @classmethod
    def of(cls, *xs) -> "RationalVector":
        return cls(tuple(_coerce_fraction(x) for x in xs))

    @classmethod
    def from_iterable(cls, xs: Iterable) -> "RationalVector":
        return cls(tuple(_coerce_fraction(x) for x in xs))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]

    def _check(self, other: "RationalVector"):
        if len(self) != len(other):
            raise DimensionMismatch("vector lengths %d and %d" % (len(self), len(other)))

    def __add__(self, other: "RationalVector") -> "RationalVector":
        self._check(other)
        return RationalVector(tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "RationalVector") -> "RationalVector":
        self._check(other)
        return RationalVector(tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "RationalVector":
        return RationalVector(tuple(-a for a in self.values))

    def scale(self, c) -> "RationalVector":
        c = _coerce_fraction(c)
        return RationalVector(tuple(c * a for a in self.values))

    __rmul__ = scale

    def dot(self, other: "RationalVector") -> Fraction:
        self._check(other)
        return sum((a * b for a, b in zip(self.values, other.values)), Fraction(0))

    def __str__(self) -> str:
        return "(" + ", ".join(str(x) for x in self.values) + ")"


@dataclass(frozen=True)
class AbelianGroupDescriptor:
    """A finitely generated abelian group, free part plus invariant factors.

    ``invariant_factors`` lists the torsion orders >= 2 in divisibility order
    (each divides the next); factors equal to 1 are never stored.
    """

    free_rank: int
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        prev = None
        for f in self.invariant_factors:
            if f < 2:
                raise ValueError("invariant factors must be >= 2, got %r" % (f,))
            if prev is not None and f % prev != 0:
                raise ValueError("invariant factors must form a divisibility chain")
            prev = f

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    def __str__(self) -> str:
        parts = ["Z/%d" % f for f in self.invariant_factors]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append("Z^%d" % self.free_rank)
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class SmithNormalForm:
    """Transform data ``u @ matrix @ v == d`` with ``u``, ``v`` unimodular."""

    u: IntegerMatrix
    d: IntegerMatrix
    v: IntegerMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.d[i, i] for i in range(min(self.d.rows, self.d.cols)))


def _select_pivot(a: list[list[int]], t: int) -> tuple[int, int] | None:
    """Smallest nonzero entry by absolute value in the trailing submatrix.

    Ties break toward the lowest (row, col) pair, which keeps the whole
    reduction deterministic.
    """
    best = None
    best_key = None
    for i in range(t, len(a)):
        for j in range(t, len(a[0])):
            if a[i][j] != 0:
                key = (abs(a[i][j]), i, j)
                if best_key is None or key < best_key:
                    best_key = key
                    best = (i, j)
    return best


def smith_normal_form(m: IntegerMatrix) -> SmithNormalForm:
    """Diagonalize an integer matrix by unimodular row and column operations.

    Returns ``SmithNormalForm(u, d, v)`` with ``u @ m @ v == d``, ``d``
    diagonal with nonnegative entries forming a divisibility chain, and
    ``det(u), det(v) in {+1, -1}``.  Pivoting always picks the smallest
    nonzero entry in absolute value (ties by lowest row, then column), so the
    output is a deterministic function of the input.
    """
    rows, cols = m.rows, m.cols
    a = [list(row) for row in m.entries]
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    def add_row(src, dst, c):
        # row_dst += c * row_src
        for j in range(cols):
            a[dst][j] += c * a[src][j]
        for j in range(rows):
            u[dst][j] += c * u[src][j]

    def add_col(src, dst, c):
        for row in a:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    for t in range(min(rows, cols)):
        while True:
            pos = _select_pivot(a, t)
            if pos is None:
                break
            if pos != (t, t):
                if pos[0] != t:
                    swap_rows(t, pos[0])
                if pos[1] != t:
                    swap_cols(t, pos[1])
            if a[t][t] < 0:
                negate_row(t)
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t] != 0:
                    q = a[i][t] // p
                    if q:
                        add_row(t, i, -q)
                    if a[i][t] != 0:
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j] != 0:
                    q = a[t][j] // p
                    if q:
                        add_col(t, j, -q)
                    if a[t][j] != 0:
                        dirty = True
            if dirty:
                continue
            # Row and column are clear; force the divisibility chain by folding
            # in any entry the pivot does not divide yet.
            stray = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if a[i][j] % p != 0:
                        stray = i
                        break
                if stray is not None:
                    break
            if stray is None:
                break
            add_row(stray, t, 1)
        if pos is None:
            break

    du = IntegerMatrix(tuple(tuple(r) for r in u))
    dd = IntegerMatrix(tuple(tuple(r) for r in a))
    dv = IntegerMatrix(tuple(tuple(r) for r in v))
    return SmithNormalForm(du, dd, dv)


def cokernel(relations: IntegerMatrix) -> AbelianGroupDescriptor:
    """Quotient of Z^g by the column span of a g x r relation matrix.

    >>> str(cokernel(IntegerMatrix.from_rows([[2], [-2]])))
    'Z/2 + Z'
    >>> str(cokernel(IntegerMatrix.from_rows([[2], [-3]])))
    'Z'
    """
    g = relations.rows
    diag = smith_normal_form(relations).diagonal
    nonzero = [d for d in diag if d != 0]
    factors = tuple(d for d in nonzero if d != 1)
    return AbelianGroupDescriptor(free_rank=g - len(nonzero), invariant_factors=factors)


def _as_fraction_rows(a) -> list[list[Fraction]]:
    if isinstance(a, IntegerMatrix):
        return [[Fraction(x) for x in row] for row in a.entries]
    return [[_coerce_fraction(x) for x in row] for row in a]


def solve_rational(a, b: Sequence) -> RationalVector | None:
    """Solve ``a @ x == b`` exactly over the rationals.

    Returns the unique solution when the system is consistent with full column
    rank, ``None`` when it is inconsistent, and raises
    :class:`UnderDetermined` when the solution space is positive-dimensional.
    ``a`` may be an :class:`IntegerMatrix` or any nested sequence of ints and
    Fractions.
    """
    rows = _as_fraction_rows(a)
    rhs = [_coerce_fraction(x) for x in b]
    if len(rows) != len(rhs):
        raise DimensionMismatch("matrix has %d rows but rhs has %d entries" % (len(rows), len(rhs)))
    if not rows:
        return RationalVector(())
    ncols = len(rows[0])
    aug = [row[:] + [r] for row, r in zip(rows, rhs)]
    pivot_cols = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(aug)):
            if aug[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivot_cols.append(c)
        r += 1
    for i in range(r, len(aug)):
        if aug[i][ncols] != 0:
            return None
    if len(pivot_cols) < ncols:
        raise UnderDetermined(
            "solution space has dimension %d" % (ncols - len(pivot_cols))
        )
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivot_cols):
        x[c] = aug[i][ncols]
    return RationalVector(tuple(x))

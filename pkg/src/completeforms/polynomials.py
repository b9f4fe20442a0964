"""Sparse exact polynomials in the entries of a generic matrix.

Variables are indexed by matrix positions (i, j); in symmetric mode the
positions (i, j) and (j, i) name the same variable, canonically stored with
i <= j.  Coefficients are Fractions, monomials are stored sparsely, and the
printing order is graded lex so that reprs are stable.

The main consumers are the symbolic minors of :func:`minor_det` and the
tangent-cone comparison :func:`verify_tangent_cone`, which shifts a batch of
minors to a distinguished point and compares each lowest-degree homogeneous
part against the complementary minor of the residual block.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import DimensionMismatch, IndexOutOfRange, TooLarge
from .reports import VerificationReport

__all__ = [
    "SparsePoly",
    "matrix_variable",
    "minor_det",
    "shift_and_leading_form",
    "verify_tangent_cone",
]

Var = tuple[int, int]
Monomial = tuple[tuple[Var, int], ...]

MAX_MINOR_SIZE = 5


def matrix_variable(i: int, j: int, symmetric: bool = False) -> Var:
    """Canonical variable name for matrix position (i, j)."""
    if i < 0 or j < 0:
        raise IndexOutOfRange("negative matrix position (%d, %d)" % (i, j))
    if symmetric and i > j:
        return (j, i)
    return (i, j)


def _var_str(v: Var) -> str:
    i, j = v
    if i <= 9 and j <= 9:
        return "z%d%d" % (i, j)
    return "z%d_%d" % (i, j)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    out = dict(a)
    for v, e in b:
        out[v] = out.get(v, 0) + e
    return tuple(sorted(out.items()))


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


@dataclass(frozen=True)
class SparsePoly:
    """Immutable sparse polynomial with Fraction coefficients."""

    terms: tuple[tuple[Monomial, Fraction], ...]

    @classmethod
    def from_dict(cls, d: dict) -> "SparsePoly":
        clean = tuple(
            sorted((m, Fraction(c)) for m, c in d.items() if Fraction(c) != 0)
        )
        return cls(clean)

    @classmethod
    def zero(cls) -> "SparsePoly":
        return cls(())

    @classmethod
    def constant(cls, c) -> "SparsePoly":
        c = Fraction(c)
        return cls(((tuple(), c),)) if c != 0 else cls(())

    @classmethod
    def variable(cls, i: int, j: int, symmetric: bool = False) -> "SparsePoly":
        v = matrix_variable(i, j, symmetric)
        return cls(((((v, 1),), Fraction(1)),))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; the zero polynomial reports -1."""
        return max((_mono_degree(m) for m, _ in self.terms), default=-1)

    def low_degree(self) -> int:
        return min((_mono_degree(m) for m, _ in self.terms), default=-1)

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        d = dict(self.terms)
        for m, c in other.terms:
            d[m] = d.get(m, Fraction(0)) + c
        return SparsePoly.from_dict(d)

    def __neg__(self) -> "SparsePoly":
        return SparsePoly(tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def __mul__(self, other: "SparsePoly") -> "SparsePoly":
        d: dict[Monomial, Fraction] = {}
        for ma, ca in self.terms:
            for mb, cb in other.terms:
                m = _mono_mul(ma, mb)
                d[m] = d.get(m, Fraction(0)) + ca * cb
        return SparsePoly.from_dict(d)

    def scale(self, c) -> "SparsePoly":
        c = Fraction(c)
        if c == 0:
            return SparsePoly.zero()
        return SparsePoly(tuple((m, c * co) for m, co in self.terms))

    def homogeneous_part(self, degree: int) -> "SparsePoly":
        return SparsePoly(tuple((m, c) for m, c in self.terms if _mono_degree(m) == degree))

    def leading_form(self) -> "SparsePoly":
        """Lowest-degree homogeneous component (the whole poly if homogeneous)."""
        if self.is_zero:
            return self
        return self.homogeneous_part(self.low_degree())

    def shift(self, shifts: dict) -> "SparsePoly":
        """Substitute z_v -> z_v + shifts[v] for each shifted variable.

        Uses the binomial expansion per variable power, so the cost stays
        proportional to the number of produced terms.
        """
        moved = {matrix_variable(*v): Fraction(c) for v, c in shifts.items()}
        out: dict[Monomial, Fraction] = {}
        for mono, coeff in self.terms:
            expansions = [((), coeff)]
            for v, e in mono:
                s = moved.get(v)
                if s is None or s == 0:
                    expansions = [(_mono_mul(m, ((v, e),)), c) for m, c in expansions]
                    continue
                new = []
                for m, c in expansions:
                    for t in range(e + 1):
                        # (z + s)^e contributes C(e,t) s^(e-t) z^t
                        factor = comb(e, t) * s ** (e - t)
                        grown = _mono_mul(m, ((v, t),)) if t else m
                        new.append((grown, c * factor))
                expansions = new
            for m, c in expansions:
                out[m] = out.get(m, Fraction(0)) + c
        return SparsePoly.from_dict(out)

    def evaluate(self, assignment: dict) -> Fraction:
        """Evaluate at a point; unassigned variables are an error."""
        point = {matrix_variable(*v): Fraction(c) for v, c in assignment.items()}
        total = Fraction(0)
        for mono, coeff in self.terms:
            val = coeff
            for v, e in mono:
                if v not in point:
                    raise KeyError("no value for variable %s" % (_var_str(v),))
                val *= point[v] ** e
            total += val
        return total

    def _sort_key(self, mono: Monomial):
        return (-_mono_degree(mono), mono)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        ordered = sorted(self.terms, key=lambda t: self._sort_key(t[0]))
        pieces = []
        for mono, coeff in ordered:
            body = "*".join(
                _var_str(v) + ("^%d" % e if e > 1 else "") for v, e in mono
            )
            mag = abs(coeff)
            if not body:
                chunk = str(mag)
            elif mag == 1:
                chunk = body
            else:
                chunk = "%s*%s" % (mag, body)
            if not pieces:
                pieces.append(chunk if coeff > 0 else "-" + chunk)
            else:
                pieces.append(("+ " if coeff > 0 else "- ") + chunk)
        return " ".join(pieces)


def minor_det(
    n: int,
    m: int,
    row_set,
    col_set,
    symmetric: bool = False,
) -> SparsePoly:
    """Symbolic determinant of the submatrix of a generic (n+1) x (m+1) matrix.

    Rows and columns are 0-based subsets of equal size, capped at 5x5 (the
    sizes this package ever needs; beyond that the term count explodes).  In
    symmetric mode the variables satisfy z(i,j) == z(j,i) and n must equal m.
    """
    rows = sorted({int(i) for i in row_set})
    cols = sorted({int(j) for j in col_set})
    if symmetric and n != m:
        raise DimensionMismatch("symmetric mode needs a square format, got %d != %d" % (n, m))
    if len(rows) != len(cols):
        raise DimensionMismatch(
            "need equally sized row and column sets, got %d and %d" % (len(rows), len(cols))
        )
    if len(rows) > MAX_MINOR_SIZE:
        raise TooLarge("minor size %d exceeds the %dx%d cap" % (len(rows), MAX_MINOR_SIZE, MAX_MINOR_SIZE))
    for i in rows:
        if i < 0 or i > n:
            raise IndexOutOfRange("row %d outside 0..%d" % (i, n))
    for j in cols:
        if j < 0 or j > m:
            raise IndexOutOfRange("column %d outside 0..%d" % (j, m))
    if not rows:
        return SparsePoly.constant(1)

    def expand(rs: tuple[int, ...], cs: tuple[int, ...]) -> SparsePoly:
        if len(rs) == 1:
            return SparsePoly.variable(rs[0], cs[0], symmetric)
        total = SparsePoly.zero()
        r0 = rs[0]
        rest = rs[1:]
        for pos, c in enumerate(cs):
            sub = expand(rest, cs[:pos] + cs[pos + 1 :])
            term = SparsePoly.variable(r0, c, symmetric) * sub
            total = total + (term if pos % 2 == 0 else -term)
        return total

    return expand(tuple(rows), tuple(cols))


def shift_and_leading_form(p: SparsePoly, shifts: dict) -> SparsePoly:
    """Lowest-degree homogeneous part of p after the substitution z -> z + shift."""
    return p.shift(shifts).leading_form()


def _segre_secant_dim(n: int, m: int, h: int) -> int:
    # dim of the h-th secant of the product-of-lines image, capped at ambient
    return min(h * (m + n + 2 - h) - 1, (n + 1) * (m + 1) - 1)


def _veronese_secant_dim(n: int, h: int) -> int:
    num = 2 * n * h - h * h + 3 * h - 2
    assert num % 2 == 0
    return min(num // 2, (n + 1) * (n + 2) // 2 - 1)


def verify_tangent_cone(
    n: int,
    m: int,
    h: int,
    k: int,
    symmetric: bool = False,
) -> VerificationReport:
    """Check the affine tangent-cone factorization at a rank-k point.

    Shift the generic matrix by the rank-k template (ones in the first k
    diagonal slots).  For every (h+1)-minor whose row and column sets contain
    all of 0..k-1, the lowest-degree homogeneous part of the shifted minor
    must equal, up to sign, the complementary (h+1-k)-minor of the trailing
    block.  That identity is what exhibits the tangent cone as a cone over a
    smaller secant, and the report also carries the predicted vertex
    dimension and the label of that smaller secant.
    """
    if symmetric and n != m:
        raise DimensionMismatch("symmetric mode needs n == m, got %d != %d" % (n, m))
    if not (1 <= k <= h <= min(n, m) + 1):
        raise ValueError(
            "need 1 <= k <= h <= min(n, m) + 1, got k=%d h=%d n=%d m=%d" % (k, h, n, m)
        )

    shifts = {(i, i): 1 for i in range(k)}
    size = h + 1
    checked = 0
    counterexample = None
    free_rows = range(k, n + 1)
    free_cols = range(k, m + 1)
    prefix = tuple(range(k))

    if size <= min(n, m) + 1:
        for extra_rows in combinations(free_rows, size - k):
            for extra_cols in combinations(free_cols, size - k):
                rows = prefix + extra_rows
                cols = prefix + extra_cols
                full = minor_det(n, m, rows, cols, symmetric)
                lead = shift_and_leading_form(full, shifts)
                expected = minor_det(n, m, extra_rows, extra_cols, symmetric)
                if lead != expected and lead != -expected:
                    counterexample = {
                        "rows": list(rows),
                        "cols": list(cols),
                        "leading_form": str(lead),
                        "expected_minor": str(expected),
                    }
                    break
                checked += 1
            if counterexample:
                break

    if symmetric:
        ambient = (n + 1) * (n + 2) // 2 - 1
        vertex_dim = ambient - (n - k + 1) * (n - k + 2) // 2
        base = {
            "kind": "veronese_secant",
            "n": n - k,
            "h": h - k,
            "dimension": _veronese_secant_dim(n - k, h - k) if h > k else None,
        }
    else:
        ambient = (n + 1) * (m + 1) - 1
        vertex_dim = n * m + n + m - (m + 1 - k) * (n + 1 - k)
        base = {
            "kind": "segre_secant",
            "n": n - k,
            "m": m - k,
            "h": h - k,
            "dimension": _segre_secant_dim(n - k, m - k, h - k) if h > k else None,
        }

    return VerificationReport(
        name="tangent-cone",
        parameters={"n": n, "m": m, "h": h, "k": k, "symmetric": symmetric},
        passed=counterexample is None,
        counts={"minors_checked": checked},
        details={"vertex_dimension": vertex_dim, "cone_base": base, "ambient_dimension": ambient},
        counterexample=counterexample,
    )

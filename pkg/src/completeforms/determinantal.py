"""Determinantal loci: exact invariants and exhaustive finite-field checks.

The dimension and degree formulas are evaluated in exact arithmetic (the
degree products are computed as Fractions and asserted integral).  The
finite-field routines enumerate *every* matrix of the requested format over
F_q; the census is vectorized with numpy in fixed-size chunks, while the two
lemma verifications stay in plain Python because their interesting inputs
are tiny.  All enumeration is bounded by ``ENUMERATION_BUDGET`` matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb

import numpy as np

from .errors import BudgetExceeded, DimensionMismatch, NonPrimeField
from .reports import VerificationReport

__all__ = [
    "SecantInvariants",
    "RankCensus",
    "segre_secant_invariants",
    "veronese_secant_invariants",
    "rank_census",
    "rank_count_closed_form",
    "verify_rank_minor_lemma",
    "verify_component_split",
]

ENUMERATION_BUDGET = 1 << 24
_CHUNK = 1 << 18


def is_prime(q: int) -> bool:
    """Trial-division primality check, plenty for single-digit moduli."""
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


# ------------------------------------------------------------ invariants

@dataclass(frozen=True)
class SecantInvariants:
    """Dimension and degree of a secant locus inside its ambient projective space."""

    kind: str
    n: int
    m: int | None
    h: int
    dimension: int
    degree: int
    ambient_dimension: int
    fills_ambient: bool

    @property
    def codimension(self) -> int:
        return self.ambient_dimension - self.dimension

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "m": self.m,
            "h": self.h,
            "dimension": self.dimension,
            "degree": self.degree,
            "ambient_dimension": self.ambient_dimension,
            "fills_ambient": self.fills_ambient,
        }


def segre_secant_invariants(n: int, m: int, h: int) -> SecantInvariants:
    """Invariants of the h-th secant of a rank-one locus of (n+1) x (m+1) matrices.

    Requires 1 <= h <= n+1 <= m+1.  At h = n+1 the locus fills the ambient
    space of matrices up to scale.
    """
    if not (1 <= h <= n + 1 <= m + 1):
        raise ValueError("need 1 <= h <= n+1 <= m+1, got h=%d n=%d m=%d" % (h, n, m))
    ambient = (n + 1) * (m + 1) - 1
    dim = h * (m + n + 2 - h) - 1
    if h == n + 1:
        degree = 1
        fills = True
    else:
        deg = Fraction(1)
        for i in range(n - h + 1):
            deg *= Fraction(comb(m + 1 + i, n - i), comb(m + 1 - h + i, n - h - i))
        assert deg.denominator == 1, "degree product must be integral"
        degree = int(deg)
        fills = False
    return SecantInvariants("segre_secant", n, m, h, dim, degree, ambient, fills)


def veronese_secant_invariants(n: int, h: int) -> SecantInvariants:
    """Invariants of the h-th secant of the degree-two embedding of P^n.

    Same contract as the rectangular case with symmetric matrices: the
    ambient space is quadratic forms in n+1 variables up to scale.
    """
    if not (1 <= h <= n + 1):
        raise ValueError("need 1 <= h <= n+1, got h=%d n=%d" % (h, n))
    ambient = (n + 1) * (n + 2) // 2 - 1
    num = 2 * n * h - h * h + 3 * h - 2
    assert num % 2 == 0
    dim = num // 2
    if h == n + 1:
        degree = 1
        fills = True
    else:
        deg = Fraction(1)
        for i in range(n - h + 1):
            deg *= Fraction(comb(n + 1 + i, n + 1 - h - i), comb(2 * i + 1, i))
        assert deg.denominator == 1, "degree product must be integral"
        degree = int(deg)
        fills = False
    return SecantInvariants("veronese_secant", n, None, h, dim, degree, ambient, fills)


def rank_count_closed_form(a: int, b: int, r: int, q: int) -> int:
    """Number of a x b matrices of rank exactly r over F_q, by the classical count."""
    if not is_prime(q):
        raise NonPrimeField("%d is not prime" % q)
    if r < 0 or r > min(a, b):
        return 0
    total = Fraction(1)
    for i in range(r):
        total *= Fraction((q**a - q**i) * (q**b - q**i), q**r - q**i)
    assert total.denominator == 1
    return int(total)


# ------------------------------------------------------------ census

@dataclass(frozen=True)
class RankCensus:
    """Exhaustive rank distribution over all matrices of one format."""

    a: int
    b: int
    q: int
    symmetric: bool
    counts: tuple[tuple[int, int], ...]

    @property
    def total(self) -> int:
        return sum(c for _, c in self.counts)

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "q": self.q,
            "symmetric": self.symmetric,
            "counts": {str(r): c for r, c in self.counts},
            "total": self.total,
        }


def _census_preconditions(a: int, b: int, q: int, symmetric: bool) -> int:
    if a < 1 or b < 1:
        raise ValueError("matrix format must be positive, got %dx%d" % (a, b))
    if symmetric and a != b:
        raise DimensionMismatch("symmetric census needs a == b, got %d != %d" % (a, b))
    if not is_prime(q):
        raise NonPrimeField(
            "%d is not prime; enumeration over prime fields only (2, 3, 5 in practice)" % q
        )
    npos = a * (a + 1) // 2 if symmetric else a * b
    count = q**npos
    if count > ENUMERATION_BUDGET:
        raise BudgetExceeded(
            "would enumerate %d matrices, budget is %d" % (count, ENUMERATION_BUDGET)
        )
    return count


def _decode_chunk(lo: int, hi: int, q: int, a: int, b: int, symmetric: bool) -> np.ndarray:
    """Matrices lo..hi-1 as an (hi-lo, a, b) uint8 array.

    Index t encodes the entries as base-q digits, position (i, j) at digit
    i*b + j (row major, least significant first).  The symmetric encoding
    runs over the upper triangle in the same row-major order.
    """
    t = np.arange(lo, hi, dtype=np.int64)
    mats = np.zeros((hi - lo, a, b), dtype=np.uint8)
    if symmetric:
        pos = 0
        for i in range(a):
            for j in range(i, b):
                digit = ((t // q**pos) % q).astype(np.uint8)
                mats[:, i, j] = digit
                mats[:, j, i] = digit
                pos += 1
    else:
        for i in range(a):
            for j in range(b):
                digit = ((t // q ** (i * b + j)) % q).astype(np.uint8)
                mats[:, i, j] = digit
    return mats


def _ranks_by_kernel_count(mats: np.ndarray, q: int) -> np.ndarray:
    """Rank of each matrix in the batch, via the size of the left kernel.

    Works over the shorter side so the coefficient sweep stays at q^min(a,b)
    vectors; the kernel of a rank-r matrix has exactly q^(s-r) elements.
    """
    nmat, a, b = mats.shape
    if a > b:
        mats = np.swapaxes(mats, 1, 2)
        a, b = b, a
    mats16 = mats.astype(np.int16)
    kernel_sizes = np.zeros(nmat, dtype=np.int64)
    for coeffs in product(range(q), repeat=a):
        x = np.array(coeffs, dtype=np.int16)
        combo = np.tensordot(x, mats16, axes=([0], [1])) % q
        kernel_sizes += ~combo.any(axis=1)
    powers = q ** np.arange(a + 1, dtype=np.int64)
    ranks = a - np.searchsorted(powers, kernel_sizes)
    return ranks


def rank_census(a: int, b: int, q: int, symmetric: bool = False) -> RankCensus:
    """Enumerate every a x b matrix over F_q and tally ranks.

    The (non-symmetric) result must match :func:`rank_count_closed_form`
    rank by rank; that comparison is this module's acceptance check.  The
    symmetric census runs over all symmetric matrices instead, encoded by
    their upper triangle.
    """
    total = _census_preconditions(a, b, q, symmetric)
    tallies = np.zeros(min(a, b) + 1, dtype=np.int64)
    lo = 0
    while lo < total:
        hi = min(lo + _CHUNK, total)
        mats = _decode_chunk(lo, hi, q, a, b, symmetric)
        ranks = _ranks_by_kernel_count(mats, q)
        tallies += np.bincount(ranks, minlength=len(tallies))
        lo = hi
    counts = tuple((r, int(c)) for r, c in enumerate(tallies))
    return RankCensus(a, b, q, symmetric, counts)


# ------------------------------------------------------------ small mod-q helpers

def _decode_matrix(t: int, q: int, a: int, b: int, symmetric: bool = False) -> list[list[int]]:
    m = [[0] * b for _ in range(a)]
    if symmetric:
        pos = 0
        for i in range(a):
            for j in range(i, b):
                d = (t // q**pos) % q
                m[i][j] = d
                m[j][i] = d
                pos += 1
    else:
        for i in range(a):
            for j in range(b):
                m[i][j] = (t // q ** (i * b + j)) % q
    return m


def _rank_mod(rows: list[list[int]], q: int) -> int:
    m = [r[:] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] % q), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], q - 2, q)
        m[rank] = [(x * inv) % q for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][c] % q:
                f = m[i][c]
                m[i] = [(x - f * y) % q for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def _det_mod(rows: list[list[int]], q: int) -> int:
    n = len(rows)
    m = [r[:] for r in rows]
    det = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] % q), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = (-det) % q
        det = (det * m[c][c]) % q
        inv = pow(m[c][c], q - 2, q)
        for i in range(c + 1, n):
            if m[i][c] % q:
                f = (m[i][c] * inv) % q
                m[i] = [(x - f * y) % q for x, y in zip(m[i], m[c])]
    return det % q


def rank_census_reference(a: int, b: int, q: int, symmetric: bool = False) -> RankCensus:
    """Pure-Python rank census, one matrix at a time.

    Much slower than :func:`rank_census` but shares none of its vectorized
    rank code, so the two act as independent cross-checks of each other.
    Subject to the same enumeration budget.
    """
    total = _census_preconditions(a, b, q, symmetric)
    tallies = [0] * (min(a, b) + 1)
    for t in range(total):
        tallies[_rank_mod(_decode_matrix(t, q, a, b, symmetric), q)] += 1
    return RankCensus(a, b, q, symmetric, tuple(enumerate(tallies)))


# ------------------------------------------------------------ lemma checks

def verify_rank_minor_lemma(a: int, b: int, k: int, q: int) -> VerificationReport:
    """On the rank <= k locus, a vanishing leading k-minor forces degenerate slices.

    Exhaustively checks: every a x b matrix over F_q of rank at most k whose
    top-left k x k determinant vanishes has its first k rows dependent or its
    first k columns dependent.
    """
    if not (1 <= k <= min(a, b)):
        raise ValueError("need 1 <= k <= min(a, b), got k=%d a=%d b=%d" % (k, a, b))
    total = _census_preconditions(a, b, q, False)
    candidates = 0
    row_deg = 0
    col_deg = 0
    counterexample = None
    for t in range(total):
        m = _decode_matrix(t, q, a, b)
        if _rank_mod(m, q) > k:
            continue
        top = [row[:k] for row in m[:k]]
        if _det_mod(top, q) != 0:
            continue
        candidates += 1
        rows_dep = _rank_mod(m[:k], q) < k
        cols_dep = _rank_mod([[m[i][j] for i in range(a)] for j in range(k)], q) < k
        if rows_dep:
            row_deg += 1
        if cols_dep:
            col_deg += 1
        if not rows_dep and not cols_dep:
            counterexample = {"matrix": m, "index": t}
            break
    return VerificationReport(
        name="rank-lemma",
        parameters={"a": a, "b": b, "k": k, "q": q},
        passed=counterexample is None,
        counts={
            "matrices": total,
            "candidates": candidates,
            "rows_degenerate": row_deg,
            "cols_degenerate": col_deg,
        },
        counterexample=counterexample,
    )


def verify_component_split(
    a: int, b: int, k: int, q: int, symmetric: bool = False
) -> VerificationReport:
    """The vanishing leading k-minor locus splits into two pieces on rank <= k.

    Within the rank <= k locus, {top-left k x k det = 0} must equal the union
    of H1 = {first k rows dependent} and H2 = {first k columns dependent};
    the report tallies both pieces and their overlap.  In the symmetric case
    the two pieces coincide as sets.
    """
    if not (1 <= k <= min(a, b)):
        raise ValueError("need 1 <= k <= min(a, b), got k=%d a=%d b=%d" % (k, a, b))
    total = _census_preconditions(a, b, q, symmetric)
    locus = 0
    det_zero = []
    h1 = set()
    h2 = set()
    counterexample = None
    for t in range(total):
        m = _decode_matrix(t, q, a, b, symmetric)
        if _rank_mod(m, q) > k:
            continue
        locus += 1
        top = [row[:k] for row in m[:k]]
        in_d = _det_mod(top, q) == 0
        rows_dep = _rank_mod(m[:k], q) < k
        cols_dep = _rank_mod([[m[i][j] for i in range(a)] for j in range(k)], q) < k
        if in_d:
            det_zero.append(t)
        if rows_dep:
            h1.add(t)
        if cols_dep:
            h2.add(t)
        if in_d != (rows_dep or cols_dep):
            counterexample = {"matrix": m, "index": t}
            break
    passed = counterexample is None
    if passed and symmetric and h1 != h2:
        sym_diff = sorted(h1 ^ h2)
        counterexample = {
            "matrix": _decode_matrix(sym_diff[0], q, a, b, symmetric),
            "index": sym_diff[0],
            "reason": "asymmetric split in symmetric mode",
        }
        passed = False
    return VerificationReport(
        name="component-split",
        parameters={"a": a, "b": b, "k": k, "q": q, "symmetric": symmetric},
        passed=passed,
        counts={
            "matrices": total,
            "rank_locus": locus,
            "det_zero": len(det_zero),
            "h1": len(h1),
            "h2": len(h2),
            "overlap": len(h1 & h2),
        },
        counterexample=counterexample,
    )

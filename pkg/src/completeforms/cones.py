"""Rational polyhedral cones and chamber decompositions.

Cones are stored in a canonical double description: the lex-sorted tuple of
primitive extreme rays together with the lex-sorted tuple of primitive facet
normals.  A cone that is not full dimensional also carries the +/- pair of
normals cutting out its linear span, which makes strict containment queries
return False for such cones without any special casing.

The chamber decomposition follows the classical fan-from-a-vector-
configuration recipe: slice the support cone by every hyperplane spanned by
the configuration, then merge the resulting cells into maximal chambers (two
cells belong to the same chamber exactly when they lie in the same subset
cones of the configuration).  Everything is exact; ambient dimension is
capped at 4, far beyond what the applications here need.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import (
    AmbientTooLarge,
    DimensionMismatch,
    NotFullDimensional,
    NotPointed,
)

__all__ = [
    "RationalCone",
    "ChamberDecomposition",
    "primitive_vector",
    "cone_from_rays",
    "dual_cone",
    "gkz_decomposition",
]

Vec = tuple[int, ...]


def primitive_vector(v: Iterable) -> Vec:
    """Scale a nonzero rational vector to its primitive integer representative.

    Direction is preserved, so (2, -4) and (1, -2) map to the same output but
    (-1, 2) does not.

    >>> primitive_vector((Fraction(3, 2), Fraction(-9, 2)))
    (1, -3)
    """
    fracs = [Fraction(x) for x in v]
    if all(x == 0 for x in fracs):
        raise ValueError("zero vector has no primitive representative")
    denom = lcm(*(x.denominator for x in fracs))
    ints = [int(x * denom) for x in fracs]
    g = gcd(*ints)
    return tuple(x // g for x in ints)


def _dot(a: Sequence, b: Sequence) -> Fraction:
    return sum((Fraction(x) * Fraction(y) for x, y in zip(a, b)), Fraction(0))


def _neg(v: Vec) -> Vec:
    return tuple(-x for x in v)


def _row_reduce(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """In-place row echelon form; returns (reduced rows, pivot column list)."""
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def _rank(vectors: Sequence[Sequence]) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    return len(_row_reduce(rows)[1])


def _kernel_basis(vectors: Sequence[Sequence], dim: int) -> list[Vec]:
    """Primitive basis of {x : v . x == 0 for all v}, in a fixed order."""
    rows = [[Fraction(x) for x in v] for v in vectors]
    rows, pivots = _row_reduce(rows)
    free = [c for c in range(dim) if c not in pivots]
    basis = []
    for fc in free:
        x = [Fraction(0)] * dim
        x[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            x[pc] = -rows[r][fc]
        basis.append(primitive_vector(x))
    return basis


@dataclass(frozen=True)
class RationalCone:
    """A pointed rational polyhedral cone in canonical double description."""

    ambient_dim: int
    rays: tuple[Vec, ...]
    facet_normals: tuple[Vec, ...]

    @property
    def dimension(self) -> int:
        return _rank(self.rays) if self.rays else 0

    @property
    def is_full_dimensional(self) -> bool:
        return self.dimension == self.ambient_dim

    def contains(self, point: Sequence, strict: bool = False) -> bool:
        """Membership test; with strict=True, interior membership.

        A cone of less than full dimension has empty interior, and its +/-
        span normals make every strict query come back False.
        """
        if len(tuple(point)) != self.ambient_dim:
            raise DimensionMismatch(
                "point of length %d in ambient dimension %d" % (len(tuple(point)), self.ambient_dim)
            )
        for n in self.facet_normals:
            s = _dot(n, point)
            if s < 0 or (strict and s == 0):
                return False
        return True

    def intersection(self, other: "RationalCone") -> "RationalCone | None":
        """Intersection cone, or None when it is not full dimensional."""
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("cones live in different ambient spaces")
        return _cone_from_inequalities(
            self.facet_normals + other.facet_normals, self.ambient_dim
        )

    def __str__(self) -> str:
        return "Cone(rays=%s)" % (", ".join(str(r) for r in self.rays),)


def cone_from_rays(rays: Iterable[Sequence], ambient_dim: int | None = None) -> RationalCone:
    """Build the canonical form of the cone spanned by the given rays.

    Raises NotPointed when the rays span a cone containing a line, and
    DimensionMismatch on inconsistent vector lengths.  Redundant generators
    are dropped; the stored rays are exactly the extreme ones.
    """
    raw = [tuple(r) for r in rays]
    if ambient_dim is None:
        if not raw:
            raise ValueError("need ambient_dim for a cone with no rays")
        ambient_dim = len(raw[0])
    for r in raw:
        if len(r) != ambient_dim:
            raise DimensionMismatch(
                "ray of length %d in ambient dimension %d" % (len(r), ambient_dim)
            )
    prim: list[Vec] = []
    for r in raw:
        if all(Fraction(x) == 0 for x in r):
            continue
        p = primitive_vector(r)
        if p not in prim:
            prim.append(p)

    if not prim:
        span_normals = [tuple(1 if i == j else 0 for j in range(ambient_dim)) for i in range(ambient_dim)]
        normals = tuple(sorted(span_normals + [_neg(n) for n in span_normals]))
        return RationalCone(ambient_dim, (), normals)

    complement = _kernel_basis(prim, ambient_dim)
    s = ambient_dim - len(complement)

    if s == 1:
        base = prim[0]
        for r in prim[1:]:
            if r == _neg(base):
                raise NotPointed("rays %s and %s span a line" % (base, r))
        in_span = [base]
        extremes = [base]
    else:
        candidates: list[Vec] = []
        for subset in combinations(prim, s - 1):
            if _rank(subset) != s - 1:
                continue
            kern = _kernel_basis(list(subset) + complement, ambient_dim)
            if len(kern) != 1:
                continue
            n = kern[0]
            signs = [_dot(n, r) for r in prim]
            if all(x >= 0 for x in signs):
                oriented = n
            elif all(x <= 0 for x in signs):
                oriented = _neg(n)
            else:
                continue
            if oriented not in candidates:
                candidates.append(oriented)
        if not candidates or _rank(candidates) < s:
            raise NotPointed("cone spanned by %s contains a line" % (prim,))
        in_span = sorted(candidates)
        extremes = []
        for r in prim:
            active = [n for n in in_span if _dot(n, r) == 0]
            if _rank(active + complement) >= ambient_dim - 1:
                extremes.append(r)

    normals = list(in_span)
    for w in complement:
        normals.append(w)
        normals.append(_neg(w))
    return RationalCone(ambient_dim, tuple(sorted(extremes)), tuple(sorted(normals)))


def dual_cone(cone: RationalCone) -> RationalCone:
    """Dual of a full-dimensional pointed cone.

    The dual's extreme rays are the facet normals of the input, so for such
    cones dual(dual(c)) == c.
    """
    if not cone.is_full_dimensional:
        raise NotFullDimensional(
            "dual implemented for full-dimensional cones only (dimension %d of %d)"
            % (cone.dimension, cone.ambient_dim)
        )
    return cone_from_rays(cone.facet_normals, cone.ambient_dim)


def _cone_from_inequalities(normals: Sequence[Vec], ambient_dim: int) -> RationalCone | None:
    """Cone {x : n . x >= 0 for all n}, or None when not full dimensional.

    Only valid when the result is pointed (the callers always include the
    facet normals of a pointed support cone, which guarantees that).
    """
    uniq: list[Vec] = []
    for n in normals:
        p = primitive_vector(n)
        if p not in uniq:
            uniq.append(p)
    extremes: list[Vec] = []
    for subset in combinations(uniq, ambient_dim - 1):
        if _rank(subset) != ambient_dim - 1:
            continue
        kern = _kernel_basis(subset, ambient_dim)
        if len(kern) != 1:
            continue
        v = kern[0]
        signs = [_dot(n, v) for n in uniq]
        if all(x >= 0 for x in signs):
            pass
        elif all(x <= 0 for x in signs):
            v = _neg(v)
        else:
            continue
        if v not in extremes:
            extremes.append(v)
    if _rank(extremes) < ambient_dim:
        return None
    return cone_from_rays(extremes, ambient_dim)


@dataclass(frozen=True)
class ChamberDecomposition:
    """A support cone partitioned into full-dimensional chambers."""

    ambient_dim: int
    support: RationalCone
    chambers: tuple[RationalCone, ...]
    hyperplane_normals: tuple[Vec, ...]

    @property
    def chamber_count(self) -> int:
        return len(self.chambers)

    @property
    def rays(self) -> tuple[Vec, ...]:
        seen: list[Vec] = []
        for c in self.chambers:
            for r in c.rays:
                if r not in seen:
                    seen.append(r)
        return tuple(sorted(seen))


def gkz_decomposition(
    vectors: Iterable[Sequence], ambient_dim: int | None = None
) -> ChamberDecomposition:
    """Chamber decomposition of cone(W) induced by the subset cones of W.

    Two interior points lie in the same chamber exactly when they lie in the
    same set of full-dimensional cones spanned by subsets of W.  Implemented
    by slicing the support along every hyperplane spanned by W and merging
    cells with equal membership signatures.
    """
    w = [primitive_vector(v) for v in vectors]
    dedup: list[Vec] = []
    for v in w:
        if v not in dedup:
            dedup.append(v)
    w = dedup
    if ambient_dim is None:
        ambient_dim = len(w[0]) if w else 0
    if ambient_dim > 4:
        raise AmbientTooLarge(
            "chamber decomposition capped at ambient dimension 4, got %d" % ambient_dim
        )
    support = cone_from_rays(w, ambient_dim)
    if not support.is_full_dimensional:
        raise NotFullDimensional("the configuration does not span the ambient space")

    hyperplanes: list[Vec] = []
    for subset in combinations(w, ambient_dim - 1):
        if _rank(subset) != ambient_dim - 1:
            continue
        kern = _kernel_basis(subset, ambient_dim)
        if len(kern) != 1:
            continue
        n = kern[0]
        canon = n if next(x for x in n if x != 0) > 0 else _neg(n)
        if canon not in hyperplanes:
            hyperplanes.append(canon)
    hyperplanes.sort()

    cells = [support]
    for n in hyperplanes:
        new_cells = []
        for cell in cells:
            sides = [_dot(n, r) for r in cell.rays]
            if all(x >= 0 for x in sides) or all(x <= 0 for x in sides):
                new_cells.append(cell)
                continue
            for half in (n, _neg(n)):
                piece = _cone_from_inequalities(cell.facet_normals + (half,), ambient_dim)
                if piece is not None:
                    new_cells.append(piece)
        cells = new_cells

    # Full-dimensional subset cones of the configuration, deduplicated.
    subset_cones: dict[tuple[Vec, ...], RationalCone] = {}
    for size in range(ambient_dim, len(w) + 1):
        for subset in combinations(w, size):
            if _rank(subset) < ambient_dim:
                continue
            cone = cone_from_rays(subset, ambient_dim)
            subset_cones.setdefault(cone.rays, cone)

    chambers: dict[tuple[Vec, ...], RationalCone] = {}
    for cell in cells:
        probe = tuple(sum(col) for col in zip(*cell.rays))
        walls: list[Vec] = []
        for cone in subset_cones.values():
            if cone.contains(probe):
                walls.extend(cone.facet_normals)
        chamber = _cone_from_inequalities(walls, ambient_dim)
        assert chamber is not None, "chamber collapsed around %s" % (probe,)
        chambers.setdefault(chamber.rays, chamber)

    ordered = tuple(chambers[k] for k in sorted(chambers))
    return ChamberDecomposition(ambient_dim, support, ordered, tuple(hyperplanes))

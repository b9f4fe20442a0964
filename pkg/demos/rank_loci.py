"""
Rank loci: counting, lemmas, and tangent cones
==============================================

Determinantal geometry from three angles: count matrices of each rank over a
small finite field, verify the minor-vanishing lemma exhaustively, and check
that the tangent cone at a rank point is a cone over a smaller secant.
"""

from completeforms.determinantal import (
    rank_census,
    rank_count_closed_form,
    segre_secant_invariants,
    verify_rank_minor_lemma,
)
from completeforms.polynomials import verify_tangent_cone

# All 2x3 matrices over F_2: 64 of them, split by rank.
census = rank_census(2, 3, 2)
print("2x3 over F_2:", census.counts)
assert census.total == 64
for rank, count in census.counts:
    closed = rank_count_closed_form(2, 3, rank, 2)
    print("  rank %d: %d (closed form %d)" % (rank, count, closed))
    assert count == closed

# The q-analog structure shows through the closed form: the number of full
# rank 2x3 matrices over F_q is (q^3-1)(q^3-q).
for q in (2, 3, 5):
    assert rank_count_closed_form(2, 3, 2, q) == (q ** 3 - 1) * (q ** 3 - q)
print("full rank count matches (q^3-1)(q^3-q) for q = 2, 3, 5")

# On the rank <= 2 locus of 3x3 matrices, a vanishing leading 2x2 minor
# forces the first two rows or the first two columns to be dependent.  The
# verifier enumerates all 512 matrices over F_2 and finds no counterexample.
lemma = verify_rank_minor_lemma(3, 3, 2, 2)
print("minor lemma:", lemma.counts)
assert lemma.passed
assert lemma.counterexample is None

# The tangent cone at a rank-1 point of the rank <= 2 locus in the space of
# 4x4 matrices: shifting by a rank-1 template and taking lowest-degree parts
# of the relevant 3x3 minors exhibits a cone over a smaller Segre secant.
report = verify_tangent_cone(3, 3, 2, 1)
print("tangent cone check:", report.counts)
assert report.passed
base = report.details["cone_base"]
print(
    "cone over the rank <= %d locus of %dx%d matrices, vertex dimension %d"
    % (base["h"], base["n"] + 1, base["m"] + 1, report.details["vertex_dimension"])
)
assert base == {"kind": "segre_secant", "n": 2, "m": 2, "h": 1, "dimension": 4}

# Cross-check the base against the secant invariant formulas directly.
invariants = segre_secant_invariants(2, 2, 1)
assert invariants.dimension == base["dimension"]
print("secant invariants agree with the predicted base")

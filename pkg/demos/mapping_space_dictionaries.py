"""
Mapping space dictionaries
==========================

Three of the catalog's spaces are stable map compactifications in disguise.
The dictionaries translate divisor classes between the two presentations,
and two independent identities confirm the translation is right.
"""

from fractions import Fraction

from completeforms.cones import primitive_vector
from completeforms.spaces import (
    KontsevichGr,
    KontsevichP,
    build_model,
    kontsevich_dictionary,
    riemann_hurwitz_coefficients,
    sanity_check_knm,
    verify_riemann_hurwitz,
)

# Conics in projective space: the translation to the rank-two tower is the
# identity on coordinates, so the interest is in which class goes where.
psi = kontsevich_dictionary(KontsevichP(3))
print("conics in P^3 translate to", build_model(psi.target).name)
for entry in psi.entries:
    print("  %-5s -> %s" % (entry.source, entry.target))
pairs = {entry.source: entry.target for entry in psi.entries}
assert pairs["T"] == "D1"
assert pairs["H"] == "D2"
assert pairs["Delta"] == "E1"

# Conics in the Grassmannian of lines: here the translation has content.
# The exceptional classes hit fractional combinations of Schubert classes.
phi = kontsevich_dictionary(KontsevichGr(4))
print("tower", build_model(phi.source).name, "maps to", build_model(phi.target).name)
for entry in phi.entries[:3]:
    print("  %-5s -> %-8s %s" % (entry.source, entry.target, entry.image))

# The interior wall (6,-3,-2) of the tower goes to the ray of the class
# 3*Hs11 + 3*Hs2 - Delta, landing at half the primitive generator.
image = phi.apply((6, -3, -2))
print("(6,-3,-2) maps to", image)
assert image == (Fraction(3, 2), Fraction(3, 2), Fraction(-1, 2))
assert primitive_vector(image) == (3, 3, -1)

# Round trip: pulling the image back must land on the original class.
assert phi.inverse_apply(image) == (6, -3, -2)
print("round trip through the inverse dictionary is exact")

# First identity: the double cover relation determines the anticanonical
# class of the tower from the Grassmannian side alone.  Solving the linear
# system reproduces the catalog's value.
for n in range(4, 8):
    coefficients = riemann_hurwitz_coefficients(n)
    report = verify_riemann_hurwitz(n)
    assert report.passed, n
    print("n=%d double cover solve:" % n, coefficients)
assert riemann_hurwitz_coefficients(4) == (10, -5, -2)

# Second identity: substituting the boundary relation into the long-form
# product expression collapses it to small integer coefficients.
report = sanity_check_knm(2, 3)
assert report.passed
print("product identity long form:", dict(report.details["long_form"]))
print("product identity reduced:  ", dict(report.details["reduced"]))
assert report.details["reduced"] == {
    "Kn": Fraction(1),
    "Km": Fraction(2),
    "Knm": Fraction(4),
}

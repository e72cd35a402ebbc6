"""
The cusp x^2 = y^3, two ways
============================

Compute the log canonical threshold of the ideal (x^2, y^3) from its
Newton polyhedron, then again from codimensions of contact loci in the
arc space, and see that both land on 5/6.
"""

from fractions import Fraction

from arcloci import MonomialIdeal
from arcloci.arcs import contact_codim, lct_via_arcs
from arcloci.monomial import lct_witness, newton_polyhedron

a = MonomialIdeal([(2, 0), (0, 3)])
P = newton_polyhedron(a)

# facets <q, x> >= c of the Newton polyhedron
for q, c in P.facets:
    print("facet", q, ">=", c)

# the polyhedral route: how far can (1,1) be scaled back into P?
value, normal = lct_witness(a)
print("lct from the polyhedron:", value, "witnessed by", normal)

# the arc route: codim Cont^{>=p} / p, minimized over levels
for p in range(1, 8):
    res = contact_codim(a, p, at_least=True)
    print(f"p = {p}: codim = {res.codim}, ratio = {Fraction(res.codim, p)}")

level_value, level = lct_via_arcs(a)
print("lct from arcs:", level_value, "first reached at level", level)
assert level_value == value == Fraction(5, 6)

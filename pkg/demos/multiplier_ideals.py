"""
Jumping through multiplier ideals
=================================

Watch I(alpha * a) shrink as alpha grows, for a = (x^2, y^3).  The ideal
is the whole ring until alpha reaches the threshold 5/6.
"""

from fractions import Fraction

from arcloci import MonomialIdeal
from arcloci.monomial import lct, multiplier_ideal_generators, multiplier_membership
from arcloci.polyhedral import format_vector

a = MonomialIdeal([(2, 0), (0, 3)])
print("lct =", lct(a))

for alpha in [Fraction(1, 2), Fraction(5, 6), Fraction(1), Fraction(7, 6), Fraction(3, 2), Fraction(2)]:
    J = multiplier_ideal_generators(a, alpha)
    gens = ", ".join(format_vector(g) for g in J.minimal_generators)
    print(f"alpha = {alpha}: {'unit ideal' if J.is_unit else gens}")

# a monomial T^u lies in I(alpha * a) exactly when alpha is below the
# threshold of a with respect to T^u; spot check against the generators
alpha = Fraction(3, 2)
J = multiplier_ideal_generators(a, alpha)
for u in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0)]:
    print(u, J.contains(u), multiplier_membership(a, alpha, u))

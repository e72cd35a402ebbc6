"""
Contact loci from a log resolution
==================================

The cusp has a log resolution with three exceptional divisors, of orders
r = (2, 3, 6) and discrepancies k = (1, 2, 4); E1 and E2 each meet E3.
Every component of Cont^p corresponds to a multi-index nu with
sum(nu_i r_i) = p supported on a nonempty intersection.
"""

from arcloci.resolution import (
    ResolutionData,
    contact_codim_res,
    decompose_contact,
    describe_valuation,
    extremal_components,
    glct_res,
)

R = ResolutionData.from_lists([2, 3, 6], [1, 2, 4], nonempty_maximal=[[0, 2], [1, 2]])

for p in range(1, 9):
    print(f"codim Cont^{p} =", contact_codim_res(R, p) or "EMPTY")

print()
for rec in decompose_contact(R, 6):
    print("nu =", rec.nu, "codim =", rec.codim)

# the component that computes the threshold sits on E3 alone
print()
print("lct =", glct_res(R))
for rec in extremal_components(R, 6):
    print("extremal:", rec.nu, describe_valuation(R, rec.nu))

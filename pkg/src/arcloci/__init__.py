"""Exact arc-space invariants of singularities.

Log canonical thresholds and multiplier ideals of monomial ideals via
Newton polyhedra, the matching integer programs over multi-contact
cylinders, and contact-locus decompositions from log-resolution data.
"""

from .arcs import (
    ContactCodimResult,
    CylinderDescriptor,
    contact_codim,
    contact_order,
    cylinder_valuation,
    glct_via_cylinders,
    lct_via_arcs,
)
from .monomial import (
    MultiplierIdealResult,
    glct,
    glct_witness,
    lct,
    lct_witness,
    multiplier_ideal_generators,
    multiplier_membership,
)
from .polyhedral import (
    MonomialIdeal,
    NewtonPolyhedron,
    build_newton_polyhedron,
    contains_scaled,
    max_scale,
    maximal_ideal,
    support_value,
)
from .resolution import (
    ContactComponentRecord,
    Divisor,
    ResolutionData,
    component_valuation,
    contact_codim_res,
    decompose_contact,
    extremal_components,
    glct_res,
    glct_res_with_divisors,
    rationality_check,
    toric_ray_data,
)

__version__ = "0.1.0"

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings

from arcloci.oracles import brute_force_facets, lp_membership
from arcloci.polyhedral import (
    MonomialIdeal,
    build_newton_polyhedron,
    contains_scaled,
    max_scale,
    maximal_ideal,
    support_value,
    vertices,
)

from conftest import CUSP, MAX2, ideals


def test_minimal_generators_enforced():
    a = MonomialIdeal([(2, 0), (0, 3), (2, 3), (3, 1), (2, 0)])
    assert a.generators == ((0, 3), (2, 0))


@pytest.mark.parametrize("gens", [[], [(0, 0)], [(1, -1)], [(1, 0), (1,)]])
def test_invalid_ideals_rejected(gens):
    with pytest.raises(ValueError):
        MonomialIdeal(gens)


def test_power_generators():
    assert CUSP.power(2).generators == ((0, 6), (2, 3), (4, 0))


def test_facets_half_line():
    assert build_newton_polyhedron(MonomialIdeal([(3,)])).facets == (((1,), 3),)


def test_facets_maximal_ideal():
    assert build_newton_polyhedron(MAX2).facets == (((0, 1), 0), ((1, 0), 0), ((1, 1), 1))


def test_facets_cusp_against_lp_oracle():
    facets = build_newton_polyhedron(CUSP).facets
    assert facets == (((0, 1), 0), ((1, 0), 0), ((3, 2), 6))
    for x in product(range(6), repeat=2):
        by_facets = all(q[0] * x[0] + q[1] * x[1] >= c for q, c in facets)
        assert by_facets == lp_membership(CUSP.generators, x)


def test_coordinate_facet_absent_when_not_supporting():
    # (xy): P = {x >= 1, y >= 1}; the coordinate hyperplanes miss it.
    assert build_newton_polyhedron(MonomialIdeal([(1, 1)])).facets == (((0, 1), 1), ((1, 0), 1))


@settings(max_examples=150, deadline=None)
@given(ideals(max_dim=4, max_gens=5))
def test_double_description_matches_brute_force(a):
    assert list(build_newton_polyhedron(a).facets) == brute_force_facets(a.generators)


@settings(max_examples=40, deadline=None)
@given(ideals(max_dim=3, max_gens=4, max_exp=3))
def test_facet_membership_equals_lp_oracle(a):
    P = build_newton_polyhedron(a)
    B = 2 * a.max_exponent
    for x in product(range(B + 1), repeat=a.dim):
        assert contains_scaled(P, x, 1) == lp_membership(a.generators, x), x


def test_facets_primitive_and_sorted():
    P = build_newton_polyhedron(MonomialIdeal([(4, 0, 2), (0, 6, 0), (2, 2, 2), (0, 0, 8)]))
    from math import gcd
    from functools import reduce

    assert list(P.facets) == sorted(P.facets)
    for q, c in P.facets:
        assert reduce(gcd, q) == 1 and c >= 0


@given(ideals(max_dim=4))
def test_generator_soundness(a):
    P = build_newton_polyhedron(a)
    assert all(contains_scaled(P, g, 1) for g in a.generators)


@pytest.mark.parametrize("q, expected", [((1, 1), 2), ((3, 2), 6), ((0, 1), 0)])
def test_support_value_cusp(q, expected):
    assert support_value(build_newton_polyhedron(CUSP), q) == expected


@settings(max_examples=60, deadline=None)
@given(ideals(max_dim=3))
def test_support_value_vertices_and_generators(a):
    P = build_newton_polyhedron(a)
    verts = vertices(P)
    assert verts
    for q in product(range(7), repeat=a.dim):
        by_verts = min(sum(x * y for x, y in zip(q, v)) for v in verts)
        assert support_value(P, q) == by_verts


def test_contains_scaled_examples():
    P = build_newton_polyhedron(CUSP)
    assert contains_scaled(P, (1, 1), Fraction(5, 6))
    assert not contains_scaled(P, (1, 1), Fraction(5, 6), interior=True)
    assert not contains_scaled(P, (1, 1), 1)
    assert contains_scaled(P, (2, 0), 1)
    with pytest.raises(ValueError):
        contains_scaled(P, (1, 1), 0)


def test_max_scale_examples():
    assert max_scale(build_newton_polyhedron(MAX2), (1, 1)) == 2
    assert max_scale(build_newton_polyhedron(CUSP), (2, 1)) == Fraction(4, 3)
    assert max_scale(build_newton_polyhedron(CUSP), (0, 0)) == 0
    assert max_scale(build_newton_polyhedron(maximal_ideal(3)), (0, 0, 0)) == 0


@settings(max_examples=60, deadline=None)
@given(ideals(max_dim=3, max_exp=4))
def test_scaling_coherence_and_max_scale(a):
    P = build_newton_polyhedron(a)
    for x in product(range(a.max_exponent + 1), repeat=a.dim):
        base = contains_scaled(P, x, 1)
        for s in (Fraction(1, 3), Fraction(1, 2), Fraction(1), Fraction(2)):
            assert contains_scaled(P, [s * c for c in x], s) == base
        m = max_scale(P, x)
        strict = all(sum(qi * xi for qi, xi in zip(q, x)) > 0 for q, c in P.facets if c == 0)
        for s in (Fraction(1, 5), m / 2, m, m + Fraction(1, 9), Fraction(3)):
            if s > 0:
                assert contains_scaled(P, x, s) == (s <= m)
                assert contains_scaled(P, x, s, interior=True) == (s < m and strict)

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arcloci.arcs import (
    CylinderDescriptor,
    contact_codim,
    contact_order,
    cylinder_valuation,
    glct_cylinder_witness,
    glct_via_cylinders,
    lct_via_arcs,
)
from arcloci.monomial import glct, lct
from arcloci.polyhedral import MonomialIdeal

from conftest import CUSP, MAX2, ideal_pairs, ideals

X = MonomialIdeal([(1, 0)])


def brute_contact_codim(a, p, at_least):
    """Plain enumeration over the box q_i <= d*p."""
    hits = []
    for q in product(range(a.dim * p + 1), repeat=a.dim):
        order = contact_order(a, q)
        if order == p or (at_least and order >= p):
            hits.append(q)
    if not hits:
        return None, []
    best = min(sum(q) for q in hits)
    return best, sorted(q for q in hits if sum(q) == best)


def test_contact_order_examples():
    assert contact_order(MonomialIdeal([(5,)]), (1,)) == 5
    assert contact_order(CUSP, (1, 1)) == 2
    assert contact_order(CUSP, (0, 0)) == 0
    assert contact_order(CUSP, CylinderDescriptor((3, 2))) == 6


def test_cylinder_descriptor_codim():
    assert CylinderDescriptor((3, 2)).codim == 5
    with pytest.raises(ValueError):
        CylinderDescriptor((1, -1))


def test_contact_codim_examples():
    assert brute_contact_codim(MAX2, 3, False) == (6, [(3, 3)])
    assert brute_contact_codim(CUSP, 6, False) == (5, [(3, 2)])
    r = contact_codim(MAX2, 3)
    assert (r.codim, [m.q for m in r.minimizers]) == (6, [(3, 3)])
    r = contact_codim(CUSP, 6)
    assert (r.codim, [m.q for m in r.minimizers]) == (5, [(3, 2)])
    r = contact_codim(MonomialIdeal([(2,)]), 3)
    assert r.is_empty and r.minimizers == ()


def test_contact_codim_rejects_nonpositive():
    with pytest.raises(ValueError):
        contact_codim(CUSP, 0)


@settings(max_examples=60, deadline=None)
@given(ideals(max_dim=3, max_gens=3, max_exp=3), st.integers(1, 4), st.booleans())
def test_contact_codim_matches_full_box_enumeration(a, p, at_least):
    r = contact_codim(a, p, at_least=at_least)
    assert (r.codim, [m.q for m in r.minimizers]) == brute_contact_codim(a, p, at_least)


def test_lct_via_arcs_examples():
    assert lct_via_arcs(MAX2) == (2, 1)
    assert lct_via_arcs(CUSP) == (Fraction(5, 6), 6)
    assert lct_via_arcs(MonomialIdeal([(3,)])) == (Fraction(1, 3), 3)


@settings(max_examples=80, deadline=None)
@given(ideals(max_dim=3))
def test_lct_routes_agree(a):
    assert lct_via_arcs(a)[0] == lct(a)


@settings(max_examples=40, deadline=None)
@given(ideals(max_dim=3))
def test_codim_lower_bound_and_monotone(a):
    c = lct(a)
    prev = 0
    for p in range(1, 21):
        k = contact_codim(a, p, at_least=True).codim
        assert k >= c * p
        assert k >= prev
        prev = k


@settings(max_examples=30, deadline=None)
@given(ideals(max_dim=3), st.integers(1, 8), st.integers(1, 8))
def test_codim_subadditive(a, p, p2):
    k = lambda n: contact_codim(a, n, at_least=True).codim
    assert k(p + p2) <= k(p) + k(p2)


@given(ideals(max_dim=3), st.lists(st.integers(0, 6), min_size=3, max_size=3),
       st.lists(st.integers(0, 6), min_size=3, max_size=3))
def test_order_superadditive(a, q, q2):
    q, q2 = tuple(q[: a.dim]), tuple(q2[: a.dim])
    s = tuple(x + y for x, y in zip(q, q2))
    assert contact_order(a, s) >= contact_order(a, q) + contact_order(a, q2)
    for g in a.generators:
        if all(sum(x * y for x, y in zip(v, g)) == contact_order(a, v) for v in (q, q2)):
            assert contact_order(a, s) == contact_order(a, q) + contact_order(a, q2)


def test_glct_via_cylinders_examples():
    assert glct_cylinder_witness(MAX2, MAX2, 1)[:2] == (3, (1, 1))
    assert glct_via_cylinders(CUSP, MAX2, 0) == lct(CUSP)
    assert glct_cylinder_witness(CUSP, X, 1)[:2] == (Fraction(4, 3), (3, 2))


@settings(max_examples=60, deadline=None)
@given(ideal_pairs(), st.sampled_from([Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(7, 3)]))
def test_glct_routes_agree(pair, beta):
    a, b = pair
    assert glct_via_cylinders(a, b, beta) == glct(a, b, beta)


def test_cylinder_valuation_examples():
    assert cylinder_valuation((4, 6)) == ((2, 3), 2)
    assert cylinder_valuation((3, 2)) == ((3, 2), 1)
    assert cylinder_valuation(CylinderDescriptor((0, 5))) == ((0, 1), 5)
    with pytest.raises(ValueError):
        cylinder_valuation((0, 0))

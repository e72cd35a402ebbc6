from fractions import Fraction

from arcloci.oracles import brute_force_facets, lp_membership


def test_lp_membership_segment():
    gens = [(2, 0), (0, 3)]
    assert lp_membership(gens, (1, Fraction(3, 2)))
    assert not lp_membership(gens, (1, 1))
    assert lp_membership(gens, (5, 0))
    assert not lp_membership(gens, (0, 2))


def test_lp_membership_one_dim():
    assert lp_membership([(3,)], (3,))
    assert not lp_membership([(3,)], (Fraction(29, 10),))


def test_brute_force_facets_small():
    assert brute_force_facets([(1, 0), (0, 1)]) == [((0, 1), 0), ((1, 0), 0), ((1, 1), 1)]
    assert brute_force_facets([(3,), (5,)]) == [((1,), 3)]

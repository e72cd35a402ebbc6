"""
Cross-checking on random ideals
===============================

Draw a small random corpus and confirm that the polyhedral threshold, the
arc-space threshold and toric resolution data agree exactly.
"""

from random import Random

from arcloci.arcs import glct_via_cylinders, lct_via_arcs
from arcloci.corpus import corpus, corpus_pairs
from arcloci.monomial import glct, lct, lct_witness
from arcloci.resolution import glct_res, toric_ray_data

ideals = corpus(25, seed=7)
for a in ideals:
    c = lct(a)
    arcs, level = lct_via_arcs(a)
    toric = glct_res(toric_ray_data(a, [lct_witness(a)[1]]))
    print(f"{str(a):<28} lct = {c!s:<6} arcs = {arcs!s:<6} level {level:<3} toric = {toric}")
    assert c == arcs == toric

rng = Random(7)
for a, b in corpus_pairs(10, seed=7):
    beta = rng.choice([0, 1, 2])
    g = glct(a, b, beta)
    assert g == glct_via_cylinders(a, b, beta)
    print(f"glct({a}; {beta} * {b}) = {g}")

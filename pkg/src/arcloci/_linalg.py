"""Small exact integer/rational linear algebra helpers."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence


def rank(rows: Sequence[Sequence]) -> int:
    """Rank of a matrix over Q by fraction-exact Gaussian elimination."""
    m = [[Fraction(v) for v in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, len(m)):
            if m[i][col] != 0:
                f = m[i][col] / m[r][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries (sign kept)."""
    g = 0
    for c in v:
        g = gcd(g, c)
    if g == 0:
        return tuple(v)
    return tuple(c // g for c in v)


def vector_gcd(v: Sequence[int]) -> int:
    g = 0
    for c in v:
        g = gcd(g, c)
    return g

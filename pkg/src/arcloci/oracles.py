"""Independent reference computations used to cross-check the fast paths.

Nothing here shares code with the double-description facet enumeration
or with the facet-based membership tests.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Sequence

from ._linalg import primitive, rank


def _phase_one(A: list[list[Fraction]], b: list[Fraction]) -> bool:
    """Whether ``{z >= 0 : A z = b}`` is nonempty, for ``b >= 0``.

    Textbook phase-one simplex with one artificial per row and Bland's
    rule, all in exact rationals.
    """
    m, n = len(A), len(A[0])
    # Tableau columns: n original, m artificial, then rhs.
    T = [A[i][:] + [Fraction(int(i == j)) for j in range(m)] + [b[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    # Objective row: minimise the sum of artificials, written as reduced costs.
    obj = [Fraction(0)] * (n + m + 1)
    for i in range(m):
        for j in range(n + m + 1):
            obj[j] -= T[i][j]
    for j in range(n, n + m):
        obj[j] += 1
    while True:
        entering = next((j for j in range(n + m) if obj[j] < 0), None)
        if entering is None:
            break
        best, leave = None, None
        for i in range(m):
            if T[i][entering] > 0:
                ratio = T[i][-1] / T[i][entering]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            # Unbounded direction; cannot occur for a bounded-below objective.
            break
        pv = T[leave][entering]
        T[leave] = [v / pv for v in T[leave]]
        for i in range(m):
            if i != leave and T[i][entering] != 0:
                f = T[i][entering]
                T[i] = [a - f * c for a, c in zip(T[i], T[leave])]
        f = obj[entering]
        obj = [a - f * c for a, c in zip(obj, T[leave])]
        basis[leave] = entering
    return obj[-1] == 0


def lp_membership(generators: Sequence[Sequence[int]], x: Sequence) -> bool:
    """Whether ``x`` is in ``conv(generators) + R^d_{>=0}``.

    Feasibility of ``lambda >= 0, sum(lambda) = 1, sum lambda_u u <= x``,
    decided by an exact simplex.  ``x`` must be nonnegative.
    """
    d = len(x)
    gens = [tuple(g) for g in generators]
    ng = len(gens)
    A, b = [], []
    for i in range(d):
        row = [Fraction(g[i]) for g in gens] + [Fraction(int(i == j)) for j in range(d)]
        A.append(row)
        b.append(Fraction(x[i]))
    A.append([Fraction(1)] * ng + [Fraction(0)] * d)
    b.append(Fraction(1))
    return _phase_one(A, b)


def _nullvector(rows: list[Sequence[int]], d: int) -> tuple[int, ...] | None:
    """A primitive integer generator of the 1-dim kernel of ``rows``, if 1-dim."""
    # Kernel of a (d-1) x d rank d-1 matrix: signed maximal minors.
    if rank(rows) != d - 1:
        return None
    from .polyhedral import _solve  # exact square solver only

    # Complete with a unit row that keeps the system nonsingular.
    for j in range(d):
        extra = tuple(int(i == j) for i in range(d))
        if rank(list(rows) + [extra]) == d:
            sol = _solve(list(rows) + [extra], [Fraction(0)] * (d - 1) + [Fraction(1)])
            den = 1
            for s in sol:
                den = den * s.denominator
            return primitive([int(s * den) for s in sol])
    return None


def brute_force_facets(generators: Sequence[Sequence[int]]) -> list[tuple[tuple[int, ...], int]]:
    """Facets of the Newton polyhedron by trying every candidate hyperplane.

    A facet's affine hull is spanned by one vertex plus ``d - 1``
    independent directions drawn from other generators and the recession
    rays ``e_j``.  Every such hyperplane is tested for validity.
    """
    gens = sorted({tuple(g) for g in generators})
    d = len(gens[0])
    rays = [tuple(int(i == j) for i in range(d)) for j in range(d)]
    found = set()
    for base in gens:
        dirs = [tuple(a - b for a, b in zip(g, base)) for g in gens if g != base] + rays
        for combo in combinations(dirs, d - 1):
            if d == 1:
                q = (1,)
            else:
                q = _nullvector(list(combo), d)
                if q is None:
                    continue
            if any(c < 0 for c in q):
                q = tuple(-c for c in q)
            if any(c < 0 for c in q) or not any(q):
                continue
            c = sum(a * b for a, b in zip(q, base))
            if all(sum(a * b for a, b in zip(q, g)) >= c for g in gens):
                found.add((q, c))
    return sorted(found)

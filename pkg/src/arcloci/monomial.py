"""Log canonical thresholds and multiplier ideals of monomial ideals.

Everything here is read off the facets of Newton polyhedra: the pair
``(A^d, alpha*Y - beta*Z)`` is log canonical exactly when
``beta * P_b + e`` sits inside ``alpha * P_a``, with ``e = (1, ..., 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Sequence

from .polyhedral import (
    MonomialIdeal,
    NewtonPolyhedron,
    Vector,
    build_newton_polyhedron,
    contains_scaled,
    scale_witness,
)


@lru_cache(maxsize=512)
def newton_polyhedron(a: MonomialIdeal) -> NewtonPolyhedron:
    """Cached ``build_newton_polyhedron``; ideals are immutable and hashable."""
    return build_newton_polyhedron(a)


@dataclass(frozen=True)
class MultiplierIdealResult:
    alpha: Fraction
    minimal_generators: tuple[Vector, ...]

    @property
    def is_unit(self) -> bool:
        return len(self.minimal_generators) == 1 and not any(self.minimal_generators[0])

    def contains(self, u: Sequence[int]) -> bool:
        return any(all(g_i <= u_i for g_i, u_i in zip(g, u)) for g in self.minimal_generators)


def _ones(d: int) -> tuple[int, ...]:
    return (1,) * d


def lct_witness(a: MonomialIdeal) -> tuple[Fraction, Vector]:
    """``lct(a)`` together with the lexicographically least facet normal computing it."""
    value, q = scale_witness(newton_polyhedron(a), _ones(a.dim))
    return value, q


def lct(a: MonomialIdeal) -> Fraction:
    """Log canonical threshold: the largest ``alpha`` with ``e`` in ``alpha * P_a``."""
    return lct_witness(a)[0]


def _check_same_dim(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.dim != b.dim:
        raise ValueError(f"ideals live in different dimensions ({a.dim} vs {b.dim})")


def glct_points(a: MonomialIdeal, points: Sequence[Sequence], beta) -> tuple[Fraction, Vector]:
    """Threshold and witness normal for the translates ``beta * v + e``, ``v`` in ``points``.

    Since ``alpha * P_a`` is convex and upward closed, containment of
    ``beta * P_b + e`` reduces to containment of the translated generators.
    """
    beta = Fraction(beta)
    if beta < 0:
        raise ValueError("beta must be nonnegative")
    P = newton_polyhedron(a)
    best, arg = None, None
    for v in points:
        x = tuple(beta * c + 1 for c in v)
        val, q = scale_witness(P, x)
        if best is None or val < best or (val == best and q < arg):
            best, arg = val, q
    return best, arg


def glct_witness(a: MonomialIdeal, b: MonomialIdeal, beta) -> tuple[Fraction, Vector]:
    _check_same_dim(a, b)
    return glct_points(a, b.generators, beta)


def glct(a: MonomialIdeal, b: MonomialIdeal, beta) -> Fraction:
    """Generalized threshold ``lct(A^d, Y; beta * Z)`` for ``Y = V(a)``, ``Z = V(b)``."""
    return glct_witness(a, b, beta)[0]


def contains_translate(a: MonomialIdeal, b: MonomialIdeal, alpha, beta) -> bool:
    """Whether ``beta * P_b + e`` lies in ``alpha * P_a``, tested pointwise on generators."""
    _check_same_dim(a, b)
    P = newton_polyhedron(a)
    beta = Fraction(beta)
    return all(contains_scaled(P, tuple(beta * c + 1 for c in v), alpha) for v in b.generators)


def multiplier_membership(a: MonomialIdeal, alpha, u: Sequence[int]) -> bool:
    """Whether ``T^u`` lies in the multiplier ideal ``I(alpha * a)``.

    Decided by the threshold criterion: ``T^u`` belongs exactly when
    ``alpha < lct(a; 1 * V(T^u))``.  Ties are excluded.
    """
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    threshold, _ = glct_points(a, [tuple(u)], 1)
    return alpha < threshold


def multiplier_ideal_generators(a: MonomialIdeal, alpha) -> MultiplierIdealResult:
    """Minimal exponents ``u`` with ``u + e`` in the interior of ``alpha * P_a``."""
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    P = newton_polyhedron(a)
    d = a.dim
    # If u is in the ideal and u_i > alpha*M then so is u - e_i, so every
    # minimal generator has coordinates <= floor(alpha*M) and this box suffices.
    bound = int(alpha * a.max_exponent) + 1
    inside = set()
    for u in product(range(bound + 1), repeat=d):
        if contains_scaled(P, tuple(c + 1 for c in u), alpha, interior=True):
            inside.add(u)
    minimal = []
    for u in sorted(inside):
        below = (u[:i] + (u[i] - 1,) + u[i + 1:] for i in range(d) if u[i] > 0)
        if not any(v in inside for v in below):
            minimal.append(u)
    return MultiplierIdealResult(alpha, tuple(minimal))

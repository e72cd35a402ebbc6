"""Seeded random monomial ideals for property checks and demos."""

from __future__ import annotations

import random

from .polyhedral import MonomialIdeal


def random_ideal(rng: random.Random, max_dim: int = 3, max_gens: int = 4, max_exp: int = 5,
                 dim: int | None = None) -> MonomialIdeal:
    """A random ideal with at most ``max_gens`` minimal generators and exponents <= ``max_exp``."""
    d = dim if dim is not None else rng.randint(1, max_dim)
    n = rng.randint(1, max_gens)
    gens = []
    while len(gens) < n:
        v = tuple(rng.randint(0, max_exp) for _ in range(d))
        if any(v):
            gens.append(v)
    return MonomialIdeal(gens, d)


def corpus(n: int, seed: int = 0, **kwargs) -> list[MonomialIdeal]:
    rng = random.Random(seed)
    return [random_ideal(rng, **kwargs) for _ in range(n)]


def corpus_pairs(n: int, seed: int = 0, **kwargs) -> list[tuple[MonomialIdeal, MonomialIdeal]]:
    """Pairs ``(a, b)`` sharing a dimension."""
    rng = random.Random(seed)
    out = []
    for _ in range(n):
        a = random_ideal(rng, **kwargs)
        b = random_ideal(rng, dim=a.dim, **{k: v for k, v in kwargs.items() if k != "max_dim"})
        out.append((a, b))
    return out

"""Arc-space side for monomial ideals: the multi-contact cylinders ``C_q``.

``C_q`` is the cylinder of arcs with contact order ``q_i`` along the
coordinate hyperplane ``T_i = 0``.  Its codimension is ``sum(q)`` and the
order of a monomial ideal along it is ``min <q, u>`` over generators.
The thresholds below are integer programs over these cylinders, solved by
exhaustive enumeration of a bounded box; nothing here reads a facet
description except to size the search box.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from ._linalg import vector_gcd
from .monomial import glct_witness, lct_witness
from .polyhedral import MonomialIdeal, Vector

_INT64_SAFE = 2**62


@dataclass(frozen=True, order=True)
class CylinderDescriptor:
    q: Vector
    codim: int = field(init=False, compare=False)

    def __post_init__(self):
        q = tuple(int(c) for c in self.q)
        if any(c < 0 for c in q):
            raise ValueError(f"cylinder index {q} has a negative entry")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "codim", sum(q))


@dataclass(frozen=True)
class ContactCodimResult:
    p: int
    codim: int | None
    minimizers: tuple[CylinderDescriptor, ...]
    at_least: bool = False

    @property
    def is_empty(self) -> bool:
        return self.codim is None


def _as_q(q) -> Vector:
    return q.q if isinstance(q, CylinderDescriptor) else tuple(q)


def contact_order(a: MonomialIdeal, q) -> int:
    """Order of ``a`` along ``C_q``."""
    q = _as_q(q)
    if len(q) != a.dim:
        raise ValueError(f"cylinder index {q} does not match dimension {a.dim}")
    return min(sum(x * y for x, y in zip(q, g)) for g in a.generators)


def _dtype(bound: int):
    return np.int64 if bound < _INT64_SAFE else object


def _grid(bound: int, k: int, dtype) -> np.ndarray:
    """All points of ``{0..bound}^k`` as rows, in lexicographic order."""
    if k == 0:
        return np.zeros((1, 0), dtype=dtype)
    axes = np.indices((bound + 1,) * k).reshape(k, -1).T
    return axes.astype(dtype)


def contact_codim(a: MonomialIdeal, p: int, at_least: bool = False) -> ContactCodimResult:
    """Codimension of ``Cont^p(a)`` (or ``Cont^{>=p}(a)``) and the cylinders realizing it.

    Minimizes ``sum(q)`` over ``q`` with ``ord_q(a) == p`` (or ``>= p``).
    Lowering any ``q_i > p`` to ``p`` keeps the constraint and lowers the
    sum, so all minimizers lie in the box ``q_i <= p``.  The first ``d - 1``
    coordinates are enumerated; the last is the least value meeting the
    order bound, which is the only candidate for a minimal sum.
    """
    if p <= 0:
        raise ValueError("contact order p must be positive")
    d = a.dim
    dt = _dtype(d * p * a.max_exponent)
    G = np.array(a.generators, dtype=dt)
    head = _grid(p, d - 1, dt)
    partial = head @ G[:, : d - 1].T
    last = G[:, d - 1]
    need = p - partial
    feasible = np.ones(len(head), dtype=bool)
    flat = last == 0
    if flat.any():
        feasible &= (need[:, flat] <= 0).all(axis=1)
    if (~flat).any():
        ceil = -((-need[:, ~flat]) // last[~flat])
        tail = np.maximum(ceil.max(axis=1), 0)
    else:
        tail = np.zeros(len(head), dtype=dt)
    order = (partial + tail[:, None] * last[None, :]).min(axis=1)
    if not at_least:
        feasible &= order == p
    if not feasible.any():
        return ContactCodimResult(p, None, (), at_least)
    sums = head.sum(axis=1) + tail
    best = sums[feasible].min()
    hit = np.flatnonzero(feasible & (sums == best))
    mins = sorted(tuple(int(c) for c in head[i]) + (int(tail[i]),) for i in hit)
    return ContactCodimResult(p, int(best), tuple(CylinderDescriptor(m) for m in mins), at_least)


def lct_via_arcs(a: MonomialIdeal) -> tuple[Fraction, int]:
    """``min codim(Cont^{>=l+1}) / (l+1)`` and the least level ``l+1`` attaining it.

    Levels run up to the order of ``a`` along the cylinder of the
    polyhedral witness normal, where the minimum is known to be reached.
    """
    _, q_star = lct_witness(a)
    top = contact_order(a, q_star)
    best, level = None, None
    for p in range(1, top + 1):
        ratio = Fraction(contact_codim(a, p, at_least=True).codim, p)
        if best is None or ratio < best:
            best, level = ratio, p
    return best, level


def _exact_argmin(num: np.ndarray, den: np.ndarray) -> int:
    """Index of the least ratio ``num/den`` (``den > 0``), first among ties."""
    j = 0
    while True:
        n0, d0 = num[j], den[j]
        cross = num * d0 - n0 * den
        better = np.flatnonzero(cross < 0)
        if len(better) == 0:
            return int(np.flatnonzero(cross == 0)[0])
        j = int(better[np.argmin(cross[better])])


def glct_cylinder_witness(a: MonomialIdeal, b: MonomialIdeal, beta) -> tuple[Fraction, Vector, int]:
    """Minimize ``(sum(q) + beta * ord_q(b)) / ord_q(a)`` over the search box.

    Returns ``(value, q, box)`` with ``q`` the lexicographically least
    minimizer.  The box is ``q_i <= d * L`` where ``L`` is the order of ``a``
    along the polyhedral witness normal; facet normals of ``P_a`` with
    right-hand side ``c`` have entries at most ``c``, so the box contains a
    cylinder attaining the threshold.
    """
    if a.dim != b.dim:
        raise ValueError(f"ideals live in different dimensions ({a.dim} vs {b.dim})")
    beta = Fraction(beta)
    if beta < 0:
        raise ValueError("beta must be nonnegative")
    d = a.dim
    _, q_w = glct_witness(a, b, beta)
    box = d * contact_order(a, q_w)
    bn, bd = beta.numerator, beta.denominator
    scale = d * box * max(a.max_exponent, b.max_exponent) * max(bn, bd, 1)
    dt = _dtype(scale * scale * 4)
    Ga = np.array(a.generators, dtype=dt).T
    Gb = np.array(b.generators, dtype=dt).T
    tail = _grid(box, d - 1, dt)
    best_num = best_den = None
    best_q = None
    for first in range(box + 1):
        Q = np.concatenate([np.full((len(tail), 1), first, dtype=dt), tail], axis=1)
        ord_a = (Q @ Ga).min(axis=1)
        keep = ord_a >= 1
        if not keep.any():
            continue
        Q, ord_a = Q[keep], ord_a[keep]
        ord_b = (Q @ Gb).min(axis=1)
        num = bd * Q.sum(axis=1) + bn * ord_b
        den = bd * ord_a
        j = _exact_argmin(num, den)
        n, m = int(num[j]), int(den[j])
        if best_num is None or n * best_den < best_num * m:
            best_num, best_den, best_q = n, m, tuple(int(c) for c in Q[j])
    return Fraction(best_num, best_den), best_q, box


def glct_via_cylinders(a: MonomialIdeal, b: MonomialIdeal, beta) -> Fraction:
    """Generalized threshold as a minimum over the cylinders ``C_q``."""
    return glct_cylinder_witness(a, b, beta)[0]


def cylinder_valuation(q) -> tuple[Vector, int]:
    """Split ``q`` as ``multiplicity * primitive``."""
    q = _as_q(q)
    if not any(q):
        raise ValueError("the zero cylinder index has no valuation")
    g = vector_gcd(q)
    return tuple(c // g for c in q), g

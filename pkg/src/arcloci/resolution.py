"""Contact loci from the numerical data of a log resolution.

A log resolution is given by divisors ``E_i`` with the order ``r_i`` of the
ideal, the discrepancy ``k_i`` (coefficient in ``K_{X'/X}``) and the order
``s_i`` of an auxiliary ideal, plus the maximal index sets ``S`` with
``E_S`` nonempty.  The component of ``Cont^p`` for a multi-index ``nu``
with ``sum(nu_i r_i) = p`` has codimension ``sum(nu_i (k_i + 1))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from ._linalg import vector_gcd
from .polyhedral import MonomialIdeal, format_vector


@dataclass(frozen=True)
class Divisor:
    name: str
    r: int
    k: int
    s: int = 0

    def __post_init__(self):
        for attr in ("r", "k", "s"):
            if getattr(self, attr) < 0:
                raise ValueError(f"divisor {self.name}: {attr} must be nonnegative")


class ResolutionData:
    """Divisor records plus the family of nonempty intersections.

    ``nonempty_maximal`` holds 0-based index sets; sets contained in others
    are discarded and uncovered singletons are added, so ``E_i`` is always
    nonempty.  ``threshold_only`` data (e.g. from :func:`toric_ray_data`)
    carries no intersection combinatorics and refuses contact decompositions.
    """

    def __init__(self, divisors: Sequence[Divisor], nonempty_maximal: Iterable[Iterable[int]] = (),
                 threshold_only: bool = False):
        self.divisors = tuple(divisors)
        if not self.divisors:
            raise ValueError("resolution data needs at least one divisor")
        names = [d.name for d in self.divisors]
        if len(set(names)) != len(names):
            raise ValueError("divisor names must be unique")
        t = len(self.divisors)
        sets = {frozenset(S) for S in nonempty_maximal}
        for S in sets:
            if not S or any(not 0 <= i < t for i in S):
                raise ValueError(f"intersection {sorted(S)} refers to a missing divisor")
        sets |= {frozenset([i]) for i in range(t) if not any(i in S for S in sets)}
        maximal = [S for S in sets if not any(S < T for T in sets)]
        self.nonempty_maximal = tuple(sorted(maximal, key=lambda S: sorted(S)))
        self.threshold_only = threshold_only

    @classmethod
    def from_lists(cls, r: Sequence[int], k: Sequence[int], s: Sequence[int] | None = None,
                   nonempty_maximal: Iterable[Iterable[int]] = ()) -> "ResolutionData":
        """Build data with divisors named ``E1, E2, ...``."""
        s = s if s is not None else [0] * len(r)
        if not len(r) == len(k) == len(s):
            raise ValueError("r, k and s must have equal length")
        divs = [Divisor(f"E{i + 1}", ri, ki, si) for i, (ri, ki, si) in enumerate(zip(r, k, s))]
        return cls(divs, nonempty_maximal)

    def __len__(self):
        return len(self.divisors)

    def __repr__(self):
        return f"ResolutionData({list(self.divisors)}, nonempty_maximal={[sorted(S) for S in self.nonempty_maximal]})"

    def __eq__(self, other):
        if not isinstance(other, ResolutionData):
            return NotImplemented
        return (self.divisors, self.nonempty_maximal, self.threshold_only) == \
            (other.divisors, other.nonempty_maximal, other.threshold_only)

    @property
    def r(self) -> tuple[int, ...]:
        return tuple(d.r for d in self.divisors)

    @property
    def k(self) -> tuple[int, ...]:
        return tuple(d.k for d in self.divisors)

    @property
    def s(self) -> tuple[int, ...]:
        return tuple(d.s for d in self.divisors)

    def intersects(self, support: Iterable[int]) -> bool:
        """Whether ``E_S`` is nonempty; the empty set always is."""
        S = frozenset(support)
        return any(S <= T for T in self.nonempty_maximal)

    def feasible_supports(self) -> list[tuple[int, ...]]:
        """Nonempty supports with ``E_S`` nonempty, using only divisors with ``r_i >= 1``."""
        out = set()
        for T in self.nonempty_maximal:
            usable = sorted(i for i in T if self.divisors[i].r > 0)
            for n in range(1, len(usable) + 1):
                out.update(combinations(usable, n))
        return sorted(out)


@dataclass(frozen=True)
class ContactComponentRecord:
    nu: tuple[int, ...]
    codim: int
    support: tuple[int, ...]
    valuation_multiplicity: int


@dataclass(frozen=True)
class RationalityVerdict:
    rational: bool
    violating_index: int | None = None
    violating_name: str | None = None

    def __bool__(self):
        return self.rational


def glct_res_with_divisors(R: ResolutionData, beta=0) -> tuple[Fraction, tuple[int, ...]]:
    """Threshold ``min (k_i + 1 + beta s_i) / r_i`` and the 0-based indices attaining it."""
    beta = Fraction(beta)
    if beta < 0:
        raise ValueError("beta must be nonnegative")
    vals = [(i, Fraction(d.k + 1 + beta * d.s) / d.r) for i, d in enumerate(R.divisors) if d.r > 0]
    if not vals:
        raise ValueError("threshold undefined: every divisor has r = 0")
    best = min(v for _, v in vals)
    return best, tuple(i for i, v in vals if v == best)


def glct_res(R: ResolutionData, beta=0) -> Fraction:
    return glct_res_with_divisors(R, beta)[0]


def _require_combinatorics(R: ResolutionData) -> None:
    if R.threshold_only:
        raise ValueError("threshold-only resolution data has no intersection data for contact loci")


def _weighted_compositions(weights: Sequence[int], p: int):
    """Positive integer vectors ``n`` with ``sum(n_j * w_j) == p``."""
    if not weights:
        if p == 0:
            yield ()
        return
    w, rest = weights[0], weights[1:]
    floor_rest = sum(rest)
    n = 1
    while n * w + floor_rest <= p:
        for tail in _weighted_compositions(rest, p - n * w):
            yield (n,) + tail
        n += 1


def _record(R: ResolutionData, nu: tuple[int, ...]) -> ContactComponentRecord:
    support = tuple(i for i, v in enumerate(nu) if v)
    codim = sum(v * (d.k + 1) for v, d in zip(nu, R.divisors))
    return ContactComponentRecord(nu, codim, support, vector_gcd(nu))


def decompose_contact(R: ResolutionData, p: int) -> list[ContactComponentRecord]:
    """All multi-indices ``nu`` making up ``Cont^p``, sorted by ``(codim, nu)``.

    Divisors with ``r_i = 0`` are left out: they add codimension without
    changing ``sum(nu_i r_i)``, and dropping them keeps a support feasible.
    """
    if p <= 0:
        raise ValueError("contact order p must be positive")
    _require_combinatorics(R)
    t = len(R)
    records = []
    for support in R.feasible_supports():
        weights = [R.divisors[i].r for i in support]
        for parts in _weighted_compositions(weights, p):
            nu = [0] * t
            for i, v in zip(support, parts):
                nu[i] = v
            records.append(_record(R, tuple(nu)))
    records.sort(key=lambda rec: (rec.codim, rec.nu))
    return records


def contact_codim_res(R: ResolutionData, p: int) -> int | None:
    """``codim Cont^p`` as ``min sum(nu_i (k_i + 1))``, or ``None`` when ``Cont^p`` is empty."""
    records = decompose_contact(R, p)
    return records[0].codim if records else None


def extremal_components(R: ResolutionData, p: int, beta=0) -> list[ContactComponentRecord]:
    """Components of ``Cont^p`` whose ``nu`` is supported on divisors computing the threshold."""
    _, computing = glct_res_with_divisors(R, beta)
    allowed = set(computing)
    return [rec for rec in decompose_contact(R, p) if set(rec.support) <= allowed]


def component_valuation(R: ResolutionData, nu: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """``(nu / g, g)`` with ``g = gcd`` of the nonzero entries of ``nu``."""
    nu = tuple(int(v) for v in nu)
    if len(nu) != len(R):
        raise ValueError(f"multi-index has length {len(nu)}, expected {len(R)}")
    if any(v < 0 for v in nu):
        raise ValueError("multi-index entries must be nonnegative")
    if not any(nu):
        raise ValueError("the zero multi-index has no valuation")
    support = [i for i, v in enumerate(nu) if v]
    if not R.threshold_only and not R.intersects(support):
        names = ", ".join(R.divisors[i].name for i in support)
        raise ValueError(f"intersection of {names} is empty")
    g = vector_gcd(nu)
    return tuple(v // g for v in nu), g


def describe_valuation(R: ResolutionData, nu: Sequence[int]) -> str:
    prim, g = component_valuation(R, nu)
    return (f"val = {g} * val_D, D = exceptional divisor of the weight-{format_vector(prim)} "
            f"blow-up of (X', E)")


def rationality_check(R: ResolutionData, f: int) -> RationalityVerdict:
    """Whether every ``k_i >= f r_i`` for ``i >= 2``.

    The first divisor must be the exceptional divisor of the blow-up along
    a codimension-``f`` locally complete intersection, so ``r_1 = 1`` and
    ``k_1 = f - 1``.  On failure the verdict names the first violating
    divisor; ``violating_index`` counts from 1.
    """
    if f < 1:
        raise ValueError("codimension f must be positive")
    first = R.divisors[0]
    if first.r != 1 or first.k != f - 1:
        raise ValueError(f"first divisor must have r = 1 and k = {f - 1}, got r = {first.r}, k = {first.k}")
    for i, d in enumerate(R.divisors[1:], start=2):
        if d.k < f * d.r:
            return RationalityVerdict(False, i, d.name)
    return RationalityVerdict(True)


def toric_ray_data(a: MonomialIdeal, rays: Sequence[Sequence[int]],
                   b: MonomialIdeal | None = None) -> ResolutionData:
    """One toric divisor per primitive ray ``q``: ``r = ord_q(a)``, ``k = sum(q) - 1``, ``s = ord_q(b)``."""
    divs = []
    for q in rays:
        q = tuple(int(c) for c in q)
        if len(q) != a.dim:
            raise ValueError(f"ray {q} does not match dimension {a.dim}")
        if any(c < 0 for c in q) or not any(q):
            raise ValueError(f"ray {q} must be nonzero and nonnegative")
        if vector_gcd(q) != 1:
            raise ValueError(f"ray {q} is not primitive")
        r = min(sum(x * y for x, y in zip(q, g)) for g in a.generators)
        s = 0 if b is None else min(sum(x * y for x, y in zip(q, g)) for g in b.generators)
        divs.append(Divisor(f"D{format_vector(q)}", r, sum(q) - 1, s))
    return ResolutionData(divs, (), threshold_only=True)

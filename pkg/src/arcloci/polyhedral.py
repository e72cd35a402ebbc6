"""Exact geometry of Newton polyhedra of monomial ideals.

A monomial ideal is stored by its minimal exponent vectors.  Its Newton
polyhedron ``conv(exponents) + R^d_{>=0}`` is described by facet
inequalities ``<q, x> >= c`` with ``q`` a primitive nonnegative integer
vector, found by incremental double description over the integers.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from ._linalg import primitive, rank

Vector = tuple[int, ...]

_VARS = "xyzwvu"


def _leq(u: Sequence[int], v: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(u, v))


def minimize_generators(vectors: Iterable[Sequence[int]]) -> tuple[list[Vector], list[Vector]]:
    """Split ``vectors`` into (minimal antichain, dropped vectors).

    Duplicates and vectors dominated componentwise by another vector are
    dropped.  Both lists come back sorted lexicographically.
    """
    uniq = sorted({tuple(int(c) for c in v) for v in vectors})
    kept, dropped = [], []
    for v in uniq:
        if any(w != v and _leq(w, v) for w in uniq):
            dropped.append(v)
        else:
            kept.append(v)
    return kept, dropped


class MonomialIdeal:
    """Proper nonzero monomial ideal in ``dim`` variables.

    >>> MonomialIdeal([(2, 0), (0, 3), (2, 3)])
    MonomialIdeal(dim=2, generators=((0, 3), (2, 0)))
    """

    __slots__ = ("dim", "generators")

    def __init__(self, generators: Iterable[Sequence[int]], dim: int | None = None):
        gens = [tuple(int(c) for c in v) for v in generators]
        if not gens:
            raise ValueError("a monomial ideal needs at least one generator")
        if dim is None:
            dim = len(gens[0])
        if dim < 1:
            raise ValueError("dimension must be positive")
        for v in gens:
            if len(v) != dim:
                raise ValueError(f"generator {v} does not have length {dim}")
            if any(c < 0 for c in v):
                raise ValueError(f"generator {v} has a negative exponent")
            if not any(v):
                raise ValueError("the zero vector generates the unit ideal, which is not proper")
        kept, _ = minimize_generators(gens)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "generators", tuple(kept))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.dim == other.dim and self.generators == other.generators

    def __hash__(self):
        return hash((self.dim, self.generators))

    def __repr__(self):
        return f"MonomialIdeal(dim={self.dim}, generators={self.generators})"

    def __str__(self):
        names = _VARS if self.dim <= len(_VARS) else None
        terms = []
        for g in self.generators:
            parts = []
            for i, e in enumerate(g):
                if e == 0:
                    continue
                var = names[i] if names else f"x{i + 1}"
                parts.append(var if e == 1 else f"{var}^{e}")
            terms.append("*".join(parts))
        return "(" + ", ".join(terms) + ")"

    @property
    def max_exponent(self) -> int:
        return max(max(g) for g in self.generators)

    def contains(self, u: Sequence[int]) -> bool:
        """Whether the monomial ``T^u`` lies in the ideal."""
        return any(_leq(g, u) for g in self.generators)

    def power(self, m: int) -> "MonomialIdeal":
        """The ideal ``a^m``, generated by all ``m``-fold sums of generators."""
        if m < 1:
            raise ValueError("power must be positive")
        sums = {tuple([0] * self.dim)}
        for _ in range(m):
            sums = {tuple(a + b for a, b in zip(s, g)) for s in sums for g in self.generators}
        return MonomialIdeal(sums, self.dim)


def maximal_ideal(dim: int) -> MonomialIdeal:
    """The ideal ``(x_1, ..., x_d)``."""
    return MonomialIdeal([tuple(int(i == j) for j in range(dim)) for i in range(dim)], dim)


class NewtonPolyhedron:
    """Facet description of ``conv(a.generators) + R^d_{>=0}``.

    ``facets`` is a tuple of ``(normal, rhs)`` pairs, sorted by normal.
    """

    __slots__ = ("source", "facets")

    def __init__(self, source: MonomialIdeal, facets: Sequence[tuple[Vector, int]]):
        self.source = source
        self.facets = tuple(sorted(facets))

    @property
    def dim(self) -> int:
        return self.source.dim

    def __repr__(self):
        return f"NewtonPolyhedron({self.source}, facets={self.facets})"

    def inequalities_str(self) -> list[str]:
        out = []
        for q, c in self.facets:
            out.append(f"<{format_vector(q)}, x> >= {c}")
        return out


def format_vector(v: Sequence) -> str:
    return "(" + ",".join(str(c) for c in v) + ")"


def _dot(q: Sequence, x: Sequence):
    return sum(a * b for a, b in zip(q, x))


def _double_description(rows: list[Vector], initial: list[int]) -> list[Vector]:
    """Extreme rays of the pointed cone ``{y : row . y >= 0 for all rows}``.

    ``initial`` indexes ``len(y)`` linearly independent rows seeding the
    iteration; the remaining rows are added one at a time.
    """
    n = len(rows[0])
    basis = [rows[i] for i in initial]
    # Rays of the seed cone are the columns of the inverse of the seed matrix.
    rays = []
    for j in range(n):
        target = [Fraction(int(i == j)) for i in range(n)]
        sol = _solve(basis, target)
        den = 1
        for s in sol:
            den = den * s.denominator // gcd(den, s.denominator)
        rays.append(primitive([int(s * den) for s in sol]))
    active = list(initial)
    for idx, row in enumerate(rows):
        if idx in initial:
            continue
        vals = [_dot(row, r) for r in rays]
        pos = [r for r, v in zip(rays, vals) if v > 0]
        zero = [r for r, v in zip(rays, vals) if v == 0]
        neg = [r for r, v in zip(rays, vals) if v < 0]
        new = []
        for rp in pos:
            vp = _dot(row, rp)
            for rn in neg:
                vn = _dot(row, rn)
                common = [rows[a] for a in active if _dot(rows[a], rp) == 0 and _dot(rows[a], rn) == 0]
                # Adjacent iff the common tight constraints cut out a 2-face.
                if len(common) < n - 2 or rank(common) != n - 2:
                    continue
                new.append(primitive([vp * b - vn * a for a, b in zip(rp, rn)]))
        rays = pos + zero + new
        active.append(idx)
    return rays


def _solve(matrix: list[Vector], rhs: list[Fraction]) -> list[Fraction]:
    """Solve the square nonsingular system ``matrix @ y = rhs`` exactly."""
    n = len(matrix)
    aug = [[Fraction(v) for v in row] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def build_newton_polyhedron(a: MonomialIdeal) -> NewtonPolyhedron:
    """Facets of the Newton polyhedron of ``a``.

    A facet ``<q, x> >= c`` corresponds to an extreme ray ``(q, c)`` of the
    cone of valid inequalities ``{(q, c) : q >= 0, <q, u> >= c for u in gens}``.
    The ray ``(0, -1)`` stands for the face at infinity and is discarded.
    """
    d = a.dim
    rows: list[Vector] = [tuple(int(i == j) for j in range(d)) + (0,) for i in range(d)]
    rows += [g + (-1,) for g in a.generators]
    rays = _double_description(rows, list(range(d + 1)))
    facets = set()
    for ray in rays:
        q, c = ray[:d], ray[d]
        if not any(q):
            continue
        g = 0
        for v in q:
            g = gcd(g, v)
        # Each facet passes through a lattice vertex, so gcd(q) divides c.
        facets.add((tuple(v // g for v in q), c // g))
    return NewtonPolyhedron(a, sorted(facets))


def vertices(P: NewtonPolyhedron) -> list[Vector]:
    """Generators that are vertices: tight on ``d`` independent facets."""
    out = []
    for g in P.source.generators:
        tight = [q for q, c in P.facets if _dot(q, g) == c]
        if len(tight) >= P.dim and rank(tight) == P.dim:
            out.append(g)
    return out


def support_value(P: NewtonPolyhedron, q: Sequence[int]) -> int:
    """``min <q, u>`` over the polyhedron, attained at a generator for ``q >= 0``."""
    if any(c < 0 for c in q):
        raise ValueError("support_value needs a nonnegative functional")
    return min(_dot(q, g) for g in P.source.generators)


def contains_scaled(P: NewtonPolyhedron, x: Sequence, alpha, interior: bool = False) -> bool:
    """Whether ``x`` lies in ``alpha * P`` (or its interior if ``interior``)."""
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if interior:
        return all(_dot(q, x) > alpha * c for q, c in P.facets)
    return all(_dot(q, x) >= alpha * c for q, c in P.facets)


def scale_witness(P: NewtonPolyhedron, x: Sequence) -> tuple[Fraction, Vector | None]:
    """Largest ``alpha`` with ``x`` in ``alpha * P`` and the first facet normal attaining it.

    Returns ``(0, None)`` if ``x`` misses a facet through the origin, which
    cannot happen for ``x >= 0`` but is kept as the documented convention.
    """
    best, arg = None, None
    for q, c in P.facets:
        val = _dot(q, x)
        if c == 0:
            if val < 0:
                return Fraction(0), None
            continue
        ratio = Fraction(val) / c
        if best is None or ratio < best:
            best, arg = ratio, q
    return best, arg


def max_scale(P: NewtonPolyhedron, x: Sequence) -> Fraction:
    """``sup {alpha : x in alpha * P}``."""
    return scale_witness(P, x)[0]

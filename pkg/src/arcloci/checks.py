"""Cross-route agreement checks behind ``arcloci check``.

Each check compares two independent computations of the same invariant
(facet route vs. arc route, double description vs. brute force, and so
on) and yields a :class:`CheckResult`.  Output order is fixed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import islice, product
from typing import Iterator

from . import arcs, monomial, polyhedral, resolution
from .oracles import brute_force_facets, lp_membership
from .polyhedral import MonomialIdeal, format_vector, maximal_ideal

# Lattice boxes bigger than this are thinned to a deterministic sample.
MAX_POINTS = 4000

CUSP = MonomialIdeal([(2, 0), (0, 3)])
CUSP_RESOLUTION = resolution.ResolutionData.from_lists([2, 3, 6], [1, 2, 4], [0, 0, 1], [[0, 2], [1, 2]])
BETAS = (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2))


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        return f"{tag}  {self.name}" + (f": {self.detail}" if self.detail else "")


def _box(bound: int, d: int) -> Iterator[tuple[int, ...]]:
    total = (bound + 1) ** d
    step = max(1, total // MAX_POINTS)
    return islice(product(range(bound + 1), repeat=d), 0, None, step)


def _result(name: str, failures: list[str]) -> CheckResult:
    if failures:
        more = f" (+{len(failures) - 1} more)" if len(failures) > 1 else ""
        return CheckResult(name, False, failures[0] + more)
    return CheckResult(name, True)


def polyhedron_checks(a: MonomialIdeal) -> list[CheckResult]:
    P = monomial.newton_polyhedron(a)
    out = []
    bad = [format_vector(g) for g in a.generators if not polyhedral.contains_scaled(P, g, 1)]
    out.append(_result("polyhedron: generators satisfy every facet", bad))

    brute = brute_force_facets(a.generators)
    out.append(_result("polyhedron: double description = brute-force hyperplanes",
                       [] if brute == list(P.facets) else [f"{list(P.facets)} != {brute}"]))

    bad = []
    for x in _box(2 * a.max_exponent, a.dim):
        if polyhedral.contains_scaled(P, x, 1) != lp_membership(a.generators, x):
            bad.append(format_vector(x))
    out.append(_result("polyhedron: facet membership = LP feasibility oracle", bad))

    bad = []
    for x in _box(a.max_exponent, a.dim):
        base = polyhedral.contains_scaled(P, x, 1)
        for s in (Fraction(1, 3), Fraction(1, 2), Fraction(1), Fraction(2)):
            if polyhedral.contains_scaled(P, [s * c for c in x], s) != base:
                bad.append(f"{format_vector(x)} at {s}")
        m = polyhedral.max_scale(P, x)
        strict = all(sum(q_i * x_i for q_i, x_i in zip(q, x)) > 0 for q, c in P.facets if c == 0)
        for s in (m / 2, m, m + Fraction(1, 7), Fraction(1)):
            if s <= 0:
                continue
            if polyhedral.contains_scaled(P, x, s) != (s <= m):
                bad.append(f"closed {format_vector(x)} at {s}")
            if polyhedral.contains_scaled(P, x, s, interior=True) != (s < m and strict):
                bad.append(f"interior {format_vector(x)} at {s}")
    out.append(_result("polyhedron: scaling coherence and max_scale consistency", bad))

    verts = polyhedral.vertices(P)
    bad = []
    for q in _box(6, a.dim):
        by_gens = polyhedral.support_value(P, q)
        by_verts = min(sum(x * y for x, y in zip(q, v)) for v in verts)
        if by_gens != by_verts:
            bad.append(format_vector(q))
    out.append(_result("polyhedron: support value over vertices = over generators", bad))
    return out


def threshold_checks(a: MonomialIdeal, aux: MonomialIdeal | None = None,
                     betas=BETAS) -> list[CheckResult]:
    out = []
    c, q_star = monomial.lct_witness(a)
    via_arcs, level = arcs.lct_via_arcs(a)
    out.append(_result("lct: facet route = arc route",
                       [] if via_arcs == c else [f"{c} != {via_arcs}"]))

    b = aux if aux is not None else maximal_ideal(a.dim)
    bad = []
    for beta in betas:
        g = monomial.glct(a, b, beta)
        g_cyl = arcs.glct_via_cylinders(a, b, beta)
        if g != g_cyl:
            bad.append(f"beta={beta}: containment {g} != cylinders {g_cyl}")
        for alpha in (g / 2, g, g + Fraction(1, 10), 2 * g):
            if monomial.contains_translate(a, b, alpha, beta) != (alpha <= g):
                bad.append(f"beta={beta}: containment at alpha={alpha}")
    out.append(_result(f"glct: containment = cylinder IP (aux {b})", bad))

    out.append(_result("glct: beta = 0 gives lct",
                       [] if monomial.glct(a, b, 0) == c else ["mismatch"]))

    bad = []
    alphas = sorted({c / 2, c, Fraction(1), c + Fraction(1, 2)})
    ideals = {}
    for alpha in alphas:
        J = monomial.multiplier_ideal_generators(a, alpha)
        ideals[alpha] = J
        if J.is_unit != (alpha < c):
            bad.append(f"unit ideal at alpha={alpha} is {J.is_unit}")
        for u in _box(6, a.dim):
            if monomial.multiplier_membership(a, alpha, u) != J.contains(u):
                bad.append(f"alpha={alpha}, u={format_vector(u)}")
    out.append(_result("multiplier ideal: generators = threshold membership", bad))

    bad = []
    for lo, hi in zip(alphas, alphas[1:]):
        if not all(ideals[lo].contains(g) for g in ideals[hi].minimal_generators):
            bad.append(f"I({hi}) not inside I({lo})")
    out.append(_result("multiplier ideal: monotone in alpha", bad))

    bad = [f"m={m}" for m in (2, 3) if monomial.lct(a.power(m)) != c / m]
    out.append(_result("lct: power scaling lct(a^m) = lct(a)/m", bad))

    bad = []
    prev = None
    codims = {}
    for p in range(1, 21):
        k = arcs.contact_codim(a, p, at_least=True).codim
        codims[p] = k
        if k < c * p:
            bad.append(f"p={p}: {k} < {c * p}")
        if prev is not None and k < prev:
            bad.append(f"p={p}: not monotone")
        prev = k
    out.append(_result("contact loci: codim Cont^>=p >= lct * p", bad))

    bad = []
    for p in range(1, 11):
        for p2 in range(1, 11):
            if codims[p + p2] > codims[p] + codims[p2]:
                bad.append(f"p={p}, p'={p2}")
    out.append(_result("contact loci: subadditive codimension", bad))

    bad = []
    pts = list(_box(4, a.dim))
    for q in pts[:: max(1, len(pts) // 60)]:
        for q2 in pts[:: max(1, len(pts) // 30)]:
            s = tuple(x + y for x, y in zip(q, q2))
            if arcs.contact_order(a, s) < arcs.contact_order(a, q) + arcs.contact_order(a, q2):
                bad.append(f"{format_vector(q)} + {format_vector(q2)}")
    out.append(_result("contact loci: order superadditive", bad))

    R = resolution.toric_ray_data(a, [q_star])
    bad = [] if resolution.glct_res(R) == c else [f"{resolution.glct_res(R)} != {c}"]
    others = [q for q, rhs in monomial.newton_polyhedron(a).facets if q != q_star]
    others.append((1,) * a.dim)
    for q in others:
        v = resolution.glct_res(resolution.toric_ray_data(a, [q])) if arcs.contact_order(a, q) else None
        if v is not None and v < c:
            bad.append(f"ray {format_vector(q)} gives {v} < {c}")
    out.append(_result("toric bridge: witness ray recovers lct, other rays bound it", bad))
    return out


def ladder_checks(max_dim: int = 4, max_p: int = 10) -> list[CheckResult]:
    bad = []
    for d in range(1, max_dim + 1):
        m = maximal_ideal(d)
        if monomial.lct(m) != d or arcs.lct_via_arcs(m)[0] != d:
            bad.append(f"d={d}: lct")
        for p in range(1, max_p + 1):
            if arcs.contact_codim(m, p, at_least=True).codim != d * p:
                bad.append(f"d={d}, p={p}")
    return [_result(f"fixture: maximal ideals d<={max_dim} have lct = d, codim = d*p", bad)]


def cusp_checks() -> list[CheckResult]:
    a = CUSP
    bad = []
    c, q = monomial.lct_witness(a)
    if (c, q) != (Fraction(5, 6), (3, 2)):
        bad.append(f"lct {c} witness {q}")
    if arcs.lct_via_arcs(a) != (Fraction(5, 6), 6):
        bad.append(f"arc route {arcs.lct_via_arcs(a)}")
    res = arcs.contact_codim(a, 6)
    if res.codim != 5 or [m.q for m in res.minimizers] != [(3, 2)]:
        bad.append("codim Cont^6")
    if monomial.multiplier_ideal_generators(a, 1).minimal_generators != ((0, 1), (1, 0)):
        bad.append("multiplier ideal at 1")
    x = MonomialIdeal([(1, 0)])
    if monomial.glct(a, x, 1) != Fraction(4, 3) or arcs.glct_via_cylinders(a, x, 1) != Fraction(4, 3):
        bad.append("glct(a, (x), 1)")
    return [_result("fixture: cusp (x^2, y^3) pipeline", bad)]


def resolution_checks(R: resolution.ResolutionData, label: str = "resolution") -> list[CheckResult]:
    out = []
    c, computing = resolution.glct_res_with_divisors(R, 0)
    top = max(R.r)
    bad = []
    ratios = []
    for p in range(1, 2 * top + 1):
        recs = resolution.decompose_contact(R, p)
        k = resolution.contact_codim_res(R, p)
        if (k is None) != (not recs) or (recs and k != min(r.codim for r in recs)):
            bad.append(f"p={p}: codim vs decomposition")
        if k is not None:
            if k < c * p:
                bad.append(f"p={p}: {k} < {c * p}")
            if p <= top:
                ratios.append(Fraction(k, p))
        ext = {rec.nu for rec in resolution.extremal_components(R, p, 0)}
        tight = {rec.nu for rec in recs if rec.codim == c * p}
        if ext != tight:
            bad.append(f"p={p}: extremal {sorted(ext)} != tight {sorted(tight)}")
    out.append(_result(f"{label}: decomposition, bound chain, extremal components", bad))
    out.append(_result(f"{label}: min codim Cont^p / p = lct",
                       [] if ratios and min(ratios) == c else [f"{min(ratios) if ratios else None} != {c}"]))
    return out


def cusp_resolution_checks() -> list[CheckResult]:
    R = CUSP_RESOLUTION
    bad = []
    recs = resolution.decompose_contact(R, 6)
    if sorted(r.codim for r in recs) != [5, 6, 6]:
        bad.append("decompose p=6")
    if resolution.contact_codim_res(R, 5) is not None:
        bad.append("Cont^5 not empty")
    ext = resolution.extremal_components(R, 6, 0)
    if [(e.nu, e.valuation_multiplicity) for e in ext] != [((0, 0, 1), 1)]:
        bad.append("extremal components p=6")
    c = resolution.glct_res(R, 0)
    ratios = [Fraction(k, p) for p in range(1, 7) if (k := resolution.contact_codim_res(R, p)) is not None]
    if c != Fraction(5, 6) or min(ratios) != c:
        bad.append("threshold")
    return [_result("fixture: cusp resolution data", bad)] + resolution_checks(R, "fixture: cusp resolution")


def rationality_checks() -> list[CheckResult]:
    bad = []
    ok = resolution.rationality_check(resolution.ResolutionData.from_lists([1, 1], [1, 2]), 2)
    no = resolution.rationality_check(resolution.ResolutionData.from_lists([1, 2], [1, 3]), 2)
    if not ok.rational:
        bad.append("((1,1),(1,2)) should be rational")
    if no.rational or no.violating_index != 2:
        bad.append("((1,1),(2,3)) should fail at divisor 2")
    return [_result("fixture: rationality criterion", bad)]


def run_all(a: MonomialIdeal, aux: MonomialIdeal | None = None, beta: Fraction | None = None,
            res: resolution.ResolutionData | None = None) -> list[CheckResult]:
    """Every applicable check for an ideal (plus optional aux ideal and resolution data)."""
    betas = BETAS if beta is None else tuple(sorted({Fraction(0), Fraction(beta)}))
    out = polyhedron_checks(a) + threshold_checks(a, aux, betas)
    if aux is not None:
        out += polyhedron_checks(aux)
    if res is not None:
        out += resolution_checks(res)
    out += cusp_checks() + ladder_checks() + cusp_resolution_checks() + rationality_checks()
    return out

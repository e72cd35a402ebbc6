"""Command-line front end.

    arcloci lct cusp.ideal.json [--via arcs]
    arcloci glct a.ideal.json --aux b.ideal.json --beta 1 [--via cylinders]
    arcloci multiplier a.ideal.json --alpha 5/6
    arcloci contact a.ideal.json --p 6 [--geq]
    arcloci contact-res cusp.res.json --p 6
    arcloci decompose cusp.res.json --p 6
    arcloci components cusp.res.json --p 6 [--beta 1]
    arcloci valuation cusp.res.json --nu 0,0,2
    arcloci rationality lci.res.json --f 2
    arcloci toric-bridge a.ideal.json --rays 3,2 1,1 [--aux b.ideal.json]
    arcloci check a.ideal.json [--aux b.ideal.json --beta 1] [--res r.res.json]

Exit status: 0 on success, 1 if ``check`` finds a mismatch, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import arcs, checks, monomial, resolution
from .fileio import InputError, parse_rational, parse_vector, read_ideal, read_resolution
from .polyhedral import format_vector


class _UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _vector(text: str) -> tuple[int, ...]:
    try:
        return parse_vector(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not an integer") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def _q(x: Fraction) -> str:
    return str(Fraction(x))


def _vec_list(vs) -> str:
    return " ".join(format_vector(v) for v in vs) if vs else "none"


class Report:
    """Text lines plus the same fields as a dict for ``--format json``."""

    def __init__(self):
        self.lines: list[str] = []
        self.fields: dict = {}

    def add(self, key: str, value, text: str):
        self.fields[key] = value
        self.lines.append(text)


def _ideal(path, warn):
    a, warnings = read_ideal(path)
    for w in warnings:
        warn(f"warning: {w}")
    return a


def cmd_lct(args, rep: Report, warn):
    a = _ideal(args.ideal, warn)
    if args.via == "arcs":
        value, level = arcs.lct_via_arcs(a)
        k = arcs.contact_codim(a, level, at_least=True).codim
        rep.add("lct", _q(value), f"lct = {_q(value)}")
        rep.add("witness_level", level, f"witness level l+1 = {level}")
        rep.add("codim", k, f"codim Cont^>={level} = {k}")
    else:
        value, q = monomial.lct_witness(a)
        rep.add("lct", _q(value), f"lct = {_q(value)}")
        rep.add("witness_facet_normal", list(q), f"witness facet normal = {format_vector(q)}")


def cmd_glct(args, rep: Report, warn):
    a = _ideal(args.ideal, warn)
    b = _ideal(args.aux, warn)
    if args.via == "cylinders":
        value, q, box = arcs.glct_cylinder_witness(a, b, args.beta)
        rep.add("glct", _q(value), f"glct = {_q(value)}")
        rep.add("witness_cylinder", list(q), f"witness cylinder q = {format_vector(q)}")
        rep.add("search_box", box, f"search box q_i <= {box}")
    else:
        value, q = monomial.glct_witness(a, b, args.beta)
        rep.add("glct", _q(value), f"glct = {_q(value)}")
        rep.add("witness_facet_normal", list(q), f"witness facet normal = {format_vector(q)}")


def cmd_multiplier(args, rep: Report, warn):
    a = _ideal(args.ideal, warn)
    J = monomial.multiplier_ideal_generators(a, args.alpha)
    rep.add("alpha", _q(J.alpha), f"alpha = {_q(J.alpha)}")
    rep.add("minimal_generators", [list(g) for g in J.minimal_generators],
            f"minimal generators: {_vec_list(J.minimal_generators)}")
    rep.add("unit", J.is_unit, f"unit ideal: {'yes' if J.is_unit else 'no'}")


def _cont(p: int, geq: bool) -> str:
    return f"Cont^>={p}" if geq else f"Cont^{p}"


def cmd_contact(args, rep: Report, warn):
    a = _ideal(args.ideal, warn)
    res = arcs.contact_codim(a, args.p, at_least=args.geq)
    label = _cont(args.p, args.geq)
    if res.is_empty:
        rep.add("codim", None, f"codim {label} = EMPTY")
        rep.fields["minimizers"] = []
    else:
        qs = [m.q for m in res.minimizers]
        rep.add("codim", res.codim, f"codim {label} = {res.codim}; minimizers: {_vec_list(qs)}")
        rep.fields["minimizers"] = [list(q) for q in qs]


def cmd_contact_res(args, rep: Report, warn):
    R = read_resolution(args.res)
    k = resolution.contact_codim_res(R, args.p)
    rep.add("codim", k, f"codim Cont^{args.p} = {'EMPTY' if k is None else k}")


def _records(R, recs, rep: Report):
    rows = []
    rep.lines.append("nu\tcodim\tsupport\tmultiplicity")
    for rec in recs:
        names = [R.divisors[i].name for i in rec.support]
        rep.lines.append(f"{format_vector(rec.nu)}\t{rec.codim}\t{{{','.join(names)}}}\t"
                         f"{rec.valuation_multiplicity}")
        rows.append({"nu": list(rec.nu), "codim": rec.codim, "support": names,
                     "valuation_multiplicity": rec.valuation_multiplicity})
    if not recs:
        rep.lines.append("EMPTY")
    rep.fields["components"] = rows


def cmd_decompose(args, rep: Report, warn):
    R = read_resolution(args.res)
    recs = resolution.decompose_contact(R, args.p)
    rep.add("p", args.p, f"Cont^{args.p}: {len(recs)} component(s)")
    _records(R, recs, rep)


def cmd_components(args, rep: Report, warn):
    R = read_resolution(args.res)
    c, computing = resolution.glct_res_with_divisors(R, args.beta)
    names = [R.divisors[i].name for i in computing]
    rep.add("threshold", _q(c), f"threshold (beta = {_q(args.beta)}) = {_q(c)}")
    rep.add("computing_divisors", names, f"computing divisors: {', '.join(names)}")
    _records(R, resolution.extremal_components(R, args.p, args.beta), rep)


def cmd_valuation(args, rep: Report, warn):
    R = read_resolution(args.res)
    prim, g = resolution.component_valuation(R, args.nu)
    rep.add("primitive", list(prim), f"primitive = {format_vector(prim)}")
    rep.add("multiplicity", g, f"multiplicity = {g}")
    d = f"exceptional divisor of the weight-{format_vector(prim)} blow-up of (X', E)"
    rep.add("divisor", d, f"divisor: {d}")


def cmd_rationality(args, rep: Report, warn):
    R = read_resolution(args.res)
    v = resolution.rationality_check(R, args.f)
    if v.rational:
        rep.add("rational", True, "rational singularities: yes (k_i >= f r_i for all i >= 2)")
        rep.fields["violating_index"] = None
    else:
        d = R.divisors[v.violating_index - 1]
        rep.add("rational", False,
                f"rational singularities: no (divisor {v.violating_index} '{d.name}': "
                f"k = {d.k} < f r = {args.f * d.r})")
        rep.fields["violating_index"] = v.violating_index


def cmd_toric_bridge(args, rep: Report, warn):
    a = _ideal(args.ideal, warn)
    b = _ideal(args.aux, warn) if args.aux else None
    R = resolution.toric_ray_data(a, args.rays, b)
    rep.lines.append("divisor\tr\tk\ts")
    rows = []
    for d in R.divisors:
        rep.lines.append(f"{d.name}\t{d.r}\t{d.k}\t{d.s}")
        rows.append({"name": d.name, "r": d.r, "k": d.k, "s": d.s})
    rep.fields["divisors"] = rows
    if any(d.r > 0 for d in R.divisors):
        c = resolution.glct_res(R, args.beta)
        rep.add("threshold", _q(c), f"threshold from rays (beta = {_q(args.beta)}) = {_q(c)}")
    else:
        rep.add("threshold", None, "threshold from rays: undefined (every ray has r = 0)")
    rep.add("threshold_only", True, "threshold-only data: contact decomposition unavailable")


def cmd_check(args, rep: Report, warn):
    a = _ideal(args.ideal, warn)
    b = _ideal(args.aux, warn) if args.aux else None
    R = read_resolution(args.res) if args.res else None
    if args.beta is not None and b is None:
        raise _UsageError("--beta needs --aux")
    results = checks.run_all(a, b, args.beta, R)
    failed = [r for r in results if not r.ok]
    for r in results:
        rep.lines.append(r.line())
    rep.add("failed", len(failed), f"{len(results)} checks, {len(failed)} failed")
    rep.fields["checks"] = [{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results]
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arcloci",
        description="Exact arc-space invariants: log canonical thresholds, multiplier ideals, contact loci.",
        epilog="Rationals are written p/q or as integers; decimals are rejected.")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
        return p

    p = add("lct", cmd_lct, "log canonical threshold of a monomial ideal")
    p.add_argument("ideal")
    p.add_argument("--via", choices=("facets", "arcs"), default="facets")

    p = add("glct", cmd_glct, "generalized threshold lct(a; beta * b)")
    p.add_argument("ideal")
    p.add_argument("--aux", required=True)
    p.add_argument("--beta", type=_rational, required=True)
    p.add_argument("--via", choices=("containment", "cylinders"), default="containment")

    p = add("multiplier", cmd_multiplier,
            "minimal generators of I(alpha * a); T^u belongs iff alpha < lct(a; T^u) (strict)")
    p.add_argument("ideal")
    p.add_argument("--alpha", type=_rational, required=True)

    p = add("contact", cmd_contact, "codimension of Cont^p (or Cont^>=p) of a monomial ideal")
    p.add_argument("ideal")
    p.add_argument("--p", type=_positive, required=True)
    p.add_argument("--geq", action="store_true", help="use order >= p")

    p = add("contact-res", cmd_contact_res, "codimension of Cont^p from resolution data")
    p.add_argument("res")
    p.add_argument("--p", type=_positive, required=True)

    p = add("decompose", cmd_decompose, "all multi-contact components of Cont^p")
    p.add_argument("res")
    p.add_argument("--p", type=_positive, required=True)

    p = add("components", cmd_components, "components supported on threshold-computing divisors")
    p.add_argument("res")
    p.add_argument("--p", type=_positive, required=True)
    p.add_argument("--beta", type=_rational, default=Fraction(0))

    p = add("valuation", cmd_valuation, "divisorial valuation of the component for a multi-index")
    p.add_argument("res")
    p.add_argument("--nu", type=_vector, required=True)

    p = add("rationality", cmd_rationality, "jet-scheme irreducibility criterion k_i >= f r_i")
    p.add_argument("res")
    p.add_argument("--f", type=_positive, required=True)

    p = add("toric-bridge", cmd_toric_bridge, "resolution-style data from toric rays")
    p.add_argument("ideal")
    p.add_argument("--rays", type=_vector, nargs="+", required=True)
    p.add_argument("--aux")
    p.add_argument("--beta", type=_rational, default=Fraction(0))

    p = add("check", cmd_check, "run every cross-route agreement check")
    p.add_argument("ideal")
    p.add_argument("--aux")
    p.add_argument("--beta", type=_rational)
    p.add_argument("--res")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    def warn(msg):
        print(msg, file=stderr)

    rep = Report()
    try:
        for attr in ("beta", "alpha"):
            v = getattr(args, attr, None)
            if v is not None and (v < 0 or (attr == "alpha" and v == 0)):
                raise _UsageError(f"--{attr} must be {'positive' if attr == 'alpha' else 'nonnegative'}")
        code = args.func(args, rep, warn) or 0
    except (InputError, _UsageError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    if args.format == "json":
        print(json.dumps(rep.fields, indent=2), file=stdout)
    else:
        for line in rep.lines:
            print(line, file=stdout)
    return code


def main() -> None:
    sys.exit(run())

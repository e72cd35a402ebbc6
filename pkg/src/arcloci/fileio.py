"""JSON file formats for ideals and resolution data.

Ideal files::

    {"dim": 2, "generators": [[2, 0], [0, 3]]}

Resolution files (``s`` defaults to 0; singletons are implied in
``nonempty_intersections``)::

    {"divisors": [{"name": "E1", "r": 2, "k": 1}, ...],
     "nonempty_intersections": [["E1", "E3"], ["E2", "E3"]]}

Validation errors carry the line of the offending JSON value.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from json import decoder as _jd
from json import scanner as _js
from pathlib import Path

from .polyhedral import MonomialIdeal, minimize_generators
from .resolution import Divisor, ResolutionData


class InputError(ValueError):
    """Malformed or invalid input; ``str()`` is ``source:line: message``."""

    def __init__(self, message: str, source: str = "<input>", line: int | None = None):
        self.source, self.line, self.message = source, line, message
        where = f"{source}:{line}" if line is not None else source
        super().__init__(f"{where}: {message}")


class _LList(list):
    line = None


class _LDict(dict):
    line = None


class _LineDecoder(json.JSONDecoder):
    """Decoder whose arrays and objects remember the line they start on."""

    def __init__(self):
        super().__init__()

        def parse_array(s_and_end, scan_once, **kw):
            s, end = s_and_end
            values, new_end = _jd.JSONArray(s_and_end, scan_once, **kw)
            out = _LList(values)
            out.line = s.count("\n", 0, end) + 1
            return out, new_end

        def parse_object(s_and_end, strict, scan_once, object_hook, object_pairs_hook, memo=None, **kw):
            s, end = s_and_end
            obj, new_end = _jd.JSONObject(s_and_end, strict, scan_once, object_hook,
                                          object_pairs_hook, memo, **kw)
            out = _LDict(obj)
            out.line = s.count("\n", 0, end) + 1
            return out, new_end

        self.parse_array = parse_array
        self.parse_object = parse_object
        self.scan_once = _js.py_make_scanner(self)


def _load(text: str, source: str):
    try:
        return _LineDecoder().decode(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc.msg}", source, exc.lineno) from None


def _line(value, fallback=None):
    return getattr(value, "line", None) or fallback


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_ideal(text: str, source: str = "<input>") -> tuple[MonomialIdeal, list[str]]:
    """Parse an ideal file; returns the ideal and warnings about dropped generators."""
    data = _load(text, source)
    if not isinstance(data, dict):
        raise InputError("expected a JSON object with 'dim' and 'generators'", source, _line(data, 1))
    top = _line(data, 1)
    for key in ("dim", "generators"):
        if key not in data:
            raise InputError(f"missing key '{key}'", source, top)
    dim = data["dim"]
    if not _is_int(dim) or dim < 1:
        raise InputError("'dim' must be a positive integer", source, top)
    gens = data["generators"]
    if not isinstance(gens, list) or not gens:
        raise InputError("'generators' must be a nonempty list of exponent vectors", source, _line(gens, top))
    vectors = []
    for g in gens:
        where = _line(g, _line(gens, top))
        if not isinstance(g, list) or not all(_is_int(c) for c in g):
            raise InputError(f"generator {json.dumps(g)} is not a list of integers", source, where)
        if len(g) != dim:
            raise InputError(f"generator {list(g)} has length {len(g)}, expected {dim}", source, where)
        if any(c < 0 for c in g):
            raise InputError(f"generator {list(g)} has a negative exponent", source, where)
        if not any(g):
            raise InputError("zero vector makes the ideal the unit ideal", source, where)
        vectors.append(tuple(g))
    _, dropped = minimize_generators(vectors)
    warnings = [f"{source}: dropped non-minimal generator {list(v)}" for v in dropped]
    return MonomialIdeal(vectors, dim), warnings


def ideal_to_dict(a: MonomialIdeal) -> dict:
    return {"dim": a.dim, "generators": [list(g) for g in a.generators]}


def dump_ideal(a: MonomialIdeal) -> str:
    return json.dumps(ideal_to_dict(a), indent=2) + "\n"


def parse_resolution(text: str, source: str = "<input>") -> ResolutionData:
    data = _load(text, source)
    if not isinstance(data, dict):
        raise InputError("expected a JSON object with 'divisors'", source, _line(data, 1))
    top = _line(data, 1)
    divs = data.get("divisors")
    if not isinstance(divs, list) or not divs:
        raise InputError("'divisors' must be a nonempty list", source, _line(divs, top))
    records, index = [], {}
    for rec in divs:
        where = _line(rec, _line(divs, top))
        if not isinstance(rec, dict):
            raise InputError("each divisor must be an object", source, where)
        unknown = set(rec) - {"name", "r", "k", "s"}
        if unknown:
            raise InputError(f"unknown divisor field(s): {', '.join(sorted(unknown))}", source, where)
        name = rec.get("name")
        if not isinstance(name, str) or not name:
            raise InputError("divisor needs a nonempty string 'name'", source, where)
        if name in index:
            raise InputError(f"duplicate divisor name '{name}'", source, where)
        vals = {}
        for key in ("r", "k", "s"):
            v = rec.get(key, 0 if key == "s" else None)
            if not _is_int(v) or v < 0:
                raise InputError(f"divisor '{name}': '{key}' must be a nonnegative integer", source, where)
            vals[key] = v
        index[name] = len(records)
        records.append(Divisor(name, vals["r"], vals["k"], vals["s"]))
    inter = data.get("nonempty_intersections", [])
    if not isinstance(inter, list):
        raise InputError("'nonempty_intersections' must be a list of name lists", source, top)
    sets = []
    for S in inter:
        where = _line(S, _line(inter, top))
        if not isinstance(S, list) or not S or not all(isinstance(n, str) for n in S):
            raise InputError("each intersection must be a nonempty list of divisor names", source, where)
        missing = [n for n in S if n not in index]
        if missing:
            raise InputError(f"unknown divisor name(s): {', '.join(missing)}", source, where)
        sets.append({index[n] for n in S})
    return ResolutionData(records, sets)


def resolution_to_dict(R: ResolutionData) -> dict:
    divs = [{"name": d.name, "r": d.r, "k": d.k, "s": d.s} for d in R.divisors]
    inter = [[R.divisors[i].name for i in sorted(S)] for S in R.nonempty_maximal if len(S) > 1]
    return {"divisors": divs, "nonempty_intersections": inter}


def dump_resolution(R: ResolutionData) -> str:
    return json.dumps(resolution_to_dict(R), indent=2) + "\n"


def read_ideal(path) -> tuple[MonomialIdeal, list[str]]:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read file: {exc.strerror}", str(path)) from None
    return parse_ideal(text, str(path))


def read_resolution(path) -> ResolutionData:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read file: {exc.strerror}", str(path)) from None
    return parse_resolution(text, str(path))


_RATIONAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or an integer literal; decimals are rejected to keep things exact."""
    m = _RATIONAL.match(text)
    if not m:
        raise ValueError(f"'{text}' is not an integer or p/q rational")
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise ValueError(f"'{text}' has zero denominator")
    return Fraction(num, den)


def parse_vector(text: str) -> tuple[int, ...]:
    """Parse ``1,0,2`` (parentheses optional)."""
    body = text.strip().strip("()")
    try:
        return tuple(int(c) for c in body.split(","))
    except ValueError:
        raise ValueError(f"'{text}' is not a comma-separated integer vector") from None

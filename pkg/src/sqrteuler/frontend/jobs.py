"""JSON job files: loading, running and reporting.

Exact numbers travel as strings (``"3/2"``, ``"1/2-3*i"``); integers are
also accepted, floats never are.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..classcalc import OrthWeightRep, WeightRep
from ..errors import InternalConventionError, ParseError, SchemaError, ValidationError
from ..localizer import (CHOW, KTHEORY, FixedComponentDatum, LocalizationResult, chow_invariant,
                         k_invariant, validate_datum)
from ..quadspace import Orientation, QuadraticSpace, Subspace
from ..scalars.gaussian import format_scalar, is_real, parse_gaussian
from ..scalars.ratfunc import PoleReport, RatFunc
from ..scalars.series import chow_to_series, exp_substitute
from .parser import parse_laurent, parse_ratfunc


# -------------------------------------------------------------- scalars
def scalar_from_json(value: Any, where: str):
    if isinstance(value, bool) or isinstance(value, float):
        raise SchemaError(f"{where}: exact numbers must be strings or integers, not {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return parse_gaussian(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"{where}: {exc}") from exc
    raise SchemaError(f"{where}: expected a number string, got {type(value).__name__}")


def scalar_to_json(x) -> str:
    return format_scalar(x)


def weights_from_json(value: Any, rank: int, where: str) -> Tuple[Tuple[int, ...], ...]:
    if not isinstance(value, list):
        raise SchemaError(f"{where}: expected a list of weights")
    out = []
    for k, w in enumerate(value):
        if isinstance(w, int) and not isinstance(w, bool) and rank == 1:
            w = [w]
        if not isinstance(w, list) or not all(isinstance(x, int) and not isinstance(x, bool)
                                              for x in w):
            raise SchemaError(f"{where}[{k}]: a weight is a list of integers")
        if len(w) != rank:
            raise SchemaError(f"{where}[{k}]: weight {w} does not have length {rank}")
        out.append(tuple(w))
    return tuple(out)


def _lex_positive(w) -> bool:
    return next((x for x in w if x != 0), 0) > 0


# ----------------------------------------------------------------- jobs
@dataclass(frozen=True)
class JobSpec:
    theory: str
    rank: int
    points: Tuple[FixedComponentDatum, ...]
    expand_order: Optional[int] = None
    limit: bool = False
    virtual_dimension: Optional[int] = None


def _require(obj: Dict, key: str, where: str):
    if key not in obj:
        raise SchemaError(f"{where}: missing field {key!r}")
    return obj[key]


def _class_field(value: Any, rank: int, where: str) -> RatFunc:
    if isinstance(value, int) and not isinstance(value, bool):
        return RatFunc.const(rank, value)
    if not isinstance(value, str):
        raise SchemaError(f"{where}: expected an expression string")
    try:
        f = parse_ratfunc(value, rank)
    except ParseError as exc:
        raise SchemaError(f"{where}: {exc}") from exc
    if not f.is_real():
        raise SchemaError(f"{where}: localization data must be real")
    return f


_POINT_KEYS = {"name", "fixed_contribution", "fixed_k_contribution", "t_moving", "e_moving",
               "insertion"}
_JOB_KEYS = {"torus_rank", "theory", "points", "expand_order", "limit", "virtual_dimension"}


def point_from_json(obj: Any, rank: int, index: int) -> FixedComponentDatum:
    where = f"points[{index}]"
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: expected an object")
    unknown = set(obj) - _POINT_KEYS
    if unknown:
        raise SchemaError(f"{where}: unknown field(s) {sorted(unknown)}")
    name = obj.get("name", f"P{index + 1}")
    if not isinstance(name, str):
        raise SchemaError(f"{where}.name: expected a string")
    fixed = scalar_from_json(obj.get("fixed_contribution", "1"), f"{where}.fixed_contribution")
    if not is_real(fixed):
        raise SchemaError(f"{where}.fixed_contribution: localization data must be real")
    t_moving = weights_from_json(obj.get("t_moving", []), rank, f"{where}.t_moving")
    e = obj.get("e_moving", {})
    if not isinstance(e, dict):
        raise SchemaError(f"{where}.e_moving: expected an object")
    unknown = set(e) - {"weights", "positive_half", "sign"}
    if unknown:
        raise SchemaError(f"{where}.e_moving: unknown field(s) {sorted(unknown)}")
    ew = weights_from_json(e.get("weights", []), rank, f"{where}.e_moving.weights")
    if "positive_half" in e:
        half = weights_from_json(e["positive_half"], rank, f"{where}.e_moving.positive_half")
    else:
        half = tuple(w for w in ew if _lex_positive(w))
    sign = e.get("sign", 1)
    if not isinstance(sign, int) or isinstance(sign, bool):
        raise SchemaError(f"{where}.e_moving.sign: expected 1 or -1")
    e_moving = OrthWeightRep.unchecked(rank, ew, half, sign)
    fk = obj.get("fixed_k_contribution")
    ins = obj.get("insertion")
    return FixedComponentDatum(
        name, WeightRep(rank, t_moving), e_moving, fixed,
        _class_field(fk, rank, f"{where}.fixed_k_contribution") if fk is not None else None,
        _class_field(ins, rank, f"{where}.insertion") if ins is not None else None)


def job_from_json(doc: Any) -> JobSpec:
    if not isinstance(doc, dict):
        raise SchemaError("job: expected a JSON object")
    unknown = set(doc) - _JOB_KEYS
    if unknown:
        raise SchemaError(f"job: unknown field(s) {sorted(unknown)}")
    rank = doc.get("torus_rank", 1)
    if not isinstance(rank, int) or isinstance(rank, bool) or rank < 1:
        raise SchemaError("torus_rank: expected a positive integer")
    theory = _require(doc, "theory", "job")
    if theory not in (CHOW, KTHEORY):
        raise SchemaError(f"theory: expected 'chow' or 'ktheory', got {theory!r}")
    points = _require(doc, "points", "job")
    if not isinstance(points, list):
        raise SchemaError("points: expected a list")
    order = doc.get("expand_order")
    if order is not None and (not isinstance(order, int) or isinstance(order, bool) or order < 0):
        raise SchemaError("expand_order: expected a nonnegative integer")
    vd = doc.get("virtual_dimension")
    if vd is not None and (not isinstance(vd, int) or isinstance(vd, bool)):
        raise SchemaError("virtual_dimension: expected an integer")
    limit = doc.get("limit", False)
    if not isinstance(limit, bool):
        raise SchemaError("limit: expected true or false")
    data = tuple(point_from_json(p, rank, k) for k, p in enumerate(points))
    return JobSpec(theory, rank, data, order, limit, vd)


def load_job(path: str) -> JobSpec:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from exc
    return job_from_json(doc)


# ------------------------------------------------------------------ run
def _assert_real(label: str, f: RatFunc):
    if not f.is_real():
        raise InternalConventionError(f"{label} has a nonzero imaginary part: {f}")


def limit_to_json(value) -> Any:
    if isinstance(value, PoleReport):
        out = {"pole_order": str(value.order)}
        if value.indeterminate:
            out["indeterminate"] = True
        return out
    return scalar_to_json(value)


def run(job: JobSpec) -> Dict[str, Any]:
    """Evaluate a job; raises ValidationError on bad data."""
    issues = [i for d in job.points for i in validate_datum(d)]
    if issues:
        raise ValidationError(issues[0].code, "; ".join(map(str, issues)))
    engine = chow_invariant if job.theory == CHOW else k_invariant
    result: LocalizationResult = engine(job.points, job.virtual_dimension, job.rank)
    for name, value in result.per_point:
        _assert_real(f"contribution of {name}", value)
    _assert_real("total", result.total)
    doc: Dict[str, Any] = {
        "theory": job.theory,
        "torus_rank": job.rank,
        "points": [{"name": n, "contribution": str(v)} for n, v in result.per_point],
        "total": str(result.total),
    }
    if job.limit:
        doc["limit"] = limit_to_json(result.limit)
    if job.expand_order is not None:
        if job.rank != 1:
            raise ValidationError("UnsupportedRank", "series expansion needs a rank-1 torus")
        expand = exp_substitute if job.theory == KTHEORY else chow_to_series
        doc["series"] = str(expand(result.total, job.expand_order))
    return doc


def render_limit(value) -> str:
    if isinstance(value, dict):
        kind = "indeterminate" if value.get("indeterminate") else "pole"
        return f"{kind} of order {value['pole_order']}"
    return value


def render_table(doc: Dict[str, Any]) -> str:
    width = max([len(p["name"]) for p in doc["points"]] + [len("series")])
    lines = [f"theory: {doc['theory']} (torus rank {doc['torus_rank']})"]
    for p in doc["points"]:
        lines.append(f"{p['name']:<{width}}  {p['contribution']}")
    lines.append(f"{'total':<{width}}  {doc['total']}")
    if "limit" in doc:
        lines.append(f"{'limit':<{width}}  {render_limit(doc['limit'])}")
    if "series" in doc:
        lines.append(f"{'series':<{width}}  {doc['series']}")
    return "\n".join(lines)


# ------------------------------------------------------------ quadforms
def _matrix_from_json(value: Any, where: str) -> List[List]:
    if not isinstance(value, list) or not all(isinstance(row, list) for row in value):
        raise SchemaError(f"{where}: expected a list of lists")
    return [[scalar_from_json(x, f"{where}[{i}][{j}]") for j, x in enumerate(row)]
            for i, row in enumerate(value)]


def quadform_from_json(doc: Any):
    """``(space, orientation or None, subspace or None)`` from a quadform document."""
    if not isinstance(doc, dict):
        raise SchemaError("quadform: expected a JSON object")
    unknown = set(doc) - {"gram", "orientation", "subspace"}
    if unknown:
        raise SchemaError(f"quadform: unknown field(s) {sorted(unknown)}")
    gram = _matrix_from_json(_require(doc, "gram", "quadform"), "gram")
    space = QuadraticSpace(tuple(tuple(r) for r in gram))
    o = None
    if "orientation" in doc:
        o = Orientation(scalar_from_json(doc["orientation"], "orientation"))
    sub = None
    if "subspace" in doc:
        cols = _matrix_from_json(doc["subspace"], "subspace")
        sub = Subspace(tuple(tuple(c) for c in cols))
    return space, o, sub


def load_quadform(path: str):
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from exc
    return quadform_from_json(doc)


def vectors_to_json(vectors: Sequence[Sequence]) -> List[List[str]]:
    return [[scalar_to_json(x) for x in v] for v in vectors]


def quadform_to_json(space: QuadraticSpace, o: Optional[Orientation] = None) -> Dict[str, Any]:
    doc: Dict[str, Any] = {"gram": vectors_to_json(space.gram)}
    if o is not None:
        doc["orientation"] = scalar_to_json(o.scalar)
    return doc

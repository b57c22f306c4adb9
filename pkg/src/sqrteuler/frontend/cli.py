"""Command-line interface.

Exit status: 0 success, 2 malformed input, 3 invalid data, 4 a sign
convention check failed (which indicates a bug, not bad input).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .. import classcalc, localizer, quadspace
from ..classcalc import OrthWeightRep, WeightRep
from ..errors import (InternalConventionError, ParseError, SchemaError, SqrtEulerError,
                      ValidationError)
from ..localizer import DT3Datum
from . import jobs

EXIT_OK = 0
EXIT_SCHEMA = 2
EXIT_VALIDATION = 3
EXIT_CONVENTION = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SchemaError(message)


def _emit(doc, text: str, fmt: str):
    if fmt == "json":
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(text)


def parse_weight_list(text: Optional[str], rank: int) -> List[tuple]:
    """``"2,-2"`` for rank 1; ``"1,0;0,1"`` (weights split by ``;``) otherwise."""
    if text is None or text.strip() == "":
        return []
    try:
        if rank == 1:
            return [(int(x),) for x in text.split(",") if x.strip()]
        out = []
        for chunk in text.split(";"):
            w = tuple(int(x) for x in chunk.split(","))
            if len(w) != rank:
                raise SchemaError(f"weight {chunk!r} does not have {rank} components")
            out.append(w)
        return out
    except ValueError as exc:
        raise SchemaError(f"bad weight list {text!r}") from exc


def _sign(text: str) -> int:
    try:
        s = int(text)
    except ValueError as exc:
        raise SchemaError(f"sign must be +1 or -1, got {text!r}") from exc
    return s


# ------------------------------------------------------------ commands
def cmd_localize(args) -> int:
    job = jobs.load_job(args.file)
    if args.expand_order is not None:
        job = jobs.JobSpec(job.theory, job.rank, job.points, args.expand_order, job.limit,
                           job.virtual_dimension)
    if args.limit:
        job = jobs.JobSpec(job.theory, job.rank, job.points, job.expand_order, True,
                           job.virtual_dimension)
    doc = jobs.run(job)
    _emit(doc, jobs.render_table(doc), args.format)
    return EXIT_OK


def cmd_class(args) -> int:
    rank = args.rank
    weights = parse_weight_list(args.weights, rank)
    kind = args.kind
    if kind in ("sqrt-euler", "k-sqrt-euler", "anderson"):
        if args.half is None:
            rep = OrthWeightRep.with_default_half(rank, weights, _sign(args.sign))
        else:
            rep = OrthWeightRep(rank, tuple(weights), tuple(parse_weight_list(args.half, rank)),
                                _sign(args.sign))
        fn = {"sqrt-euler": classcalc.sqrt_euler, "k-sqrt-euler": classcalc.k_sqrt_euler,
              "anderson": classcalc.anderson_epsilon}[kind]
        value = str(fn(rep))
    elif kind == "todd":
        value = str(classcalc.todd_series(WeightRep(rank, tuple(weights)), args.order))
    else:
        fn = {"euler": classcalc.euler, "k-euler": classcalc.k_euler,
              "sqrt-det": classcalc.sqrt_det}[kind]
        value = str(fn(WeightRep(rank, tuple(weights))))
    _emit({"class": kind, "value": value}, value, args.format)
    return EXIT_OK


def cmd_quadform(args) -> int:
    space, o, sub = jobs.load_quadform(args.space)
    action = args.action

    def need(obj, what):
        if obj is None:
            raise SchemaError(f"quadform {action} needs a {what!r} field")
        return obj

    if action == "sign":
        s = quadspace.isotropic_sign(space, need(o, "orientation"), need(sub, "subspace"))
        text = f"{s:+d}"
        _emit({"sign": s}, text, args.format)
    elif action == "validate":
        ok = quadspace.orientation_validate(space, need(o, "orientation"))
        _emit({"valid": ok}, "true" if ok else "false", args.format)
    elif action == "canonical":
        c = quadspace.canonical_orientation(space, need(sub, "subspace"))
        text = jobs.scalar_to_json(c.scalar)
        _emit({"orientation": text}, text, args.format)
    elif action == "normal-form":
        if sub is not None:
            frame = quadspace.hyperbolic_extend(space, sub)
        else:
            frame = quadspace.hyperbolic_normal_form(space)
        doc = {"e": jobs.vectors_to_json(frame.e_basis), "f": jobs.vectors_to_json(frame.f_basis)}
        if frame.unit is not None:
            doc["unit"] = [jobs.scalar_to_json(x) for x in frame.unit]
        lines = [f"e{k + 1} = ({', '.join(v)})" for k, v in enumerate(doc["e"])]
        lines += [f"f{k + 1} = ({', '.join(v)})" for k, v in enumerate(doc["f"])]
        if "unit" in doc:
            lines.append(f"unit = ({', '.join(doc['unit'])})")
        _emit(doc, "\n".join(lines), args.format)
    elif action == "reduce":
        reduced, ro = quadspace.reduce(space, need(o, "orientation"), need(sub, "subspace"))
        doc = jobs.quadform_to_json(reduced, ro)
        text = f"gram = {doc['gram']}\norientation = {doc['orientation']}"
        _emit(doc, text, args.format)
    return EXIT_OK


def cmd_dt3(args) -> int:
    rank = args.rank
    d3 = DT3Datum(WeightRep(rank, tuple(parse_weight_list(args.f0, rank))),
                  WeightRep(rank, tuple(parse_weight_list(args.f1, rank))),
                  jobs.scalar_from_json(args.fixed, "--fixed"))
    check = localizer.dt3_check(d3)
    doc = {
        "chow": {"cy4": str(check.chow_4fold), "threefold": str(check.chow_3fold),
                 "match": check.chow_ok},
        "ktheory": {"cy4": str(check.k_4fold), "threefold": str(check.k_3fold),
                    "match": check.k_ok},
    }
    text = "\n".join(
        f"{key}: {doc[key]['cy4']}, matches 3-fold: {'true' if doc[key]['match'] else 'false'}"
        for key in ("chow", "ktheory"))
    _emit(doc, text, args.format)
    return EXIT_OK if check.chow_ok and check.k_ok else EXIT_CONVENTION


def cmd_sq(args) -> int:
    k = args.k
    if k < 1:
        raise SchemaError("--k must be at least 1")
    xhalf, sq12 = classcalc.check_xhalf(k), classcalc.check_sq12(k)
    poly = classcalc.render_sq(k)
    doc = {"k": k, "sq": poly, "xhalf": xhalf, "sq12": sq12}
    verdict = lambda ok: "pass" if ok else "FAIL"
    text = f"{poly}\nxhalf: {verdict(xhalf)}\nsq12: {verdict(sq12)}"
    _emit(doc, text, args.format)
    return EXIT_OK if xhalf and sq12 else EXIT_CONVENTION


# -------------------------------------------------------------- parser
def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("table", "json"), default="table")

    p = _Parser(prog="sqrteuler", description="Exact square-root Euler class calculus.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    loc = sub.add_parser("localize", parents=[fmt], help="evaluate a localization job file")
    loc.add_argument("file")
    loc.add_argument("--expand-order", type=int, default=None)
    loc.add_argument("--limit", action="store_true")
    loc.set_defaults(func=cmd_localize)

    cls = sub.add_parser("class", parents=[fmt], help="characteristic class of a representation")
    cls.add_argument("kind", choices=("sqrt-euler", "k-sqrt-euler", "euler", "k-euler", "todd",
                                      "sqrt-det", "anderson"))
    cls.add_argument("--weights", default="")
    cls.add_argument("--half", default=None)
    cls.add_argument("--sign", default="+1")
    cls.add_argument("--rank", type=int, default=1)
    cls.add_argument("--order", type=int, default=4, help="truncation order for todd")
    cls.set_defaults(func=cmd_class)

    qf = sub.add_parser("quadform", parents=[fmt], help="quadratic space operations")
    qf.add_argument("action", choices=("sign", "normal-form", "reduce", "validate", "canonical"))
    qf.add_argument("--space", required=True)
    qf.set_defaults(func=cmd_quadform)

    dt3 = sub.add_parser("dt3", parents=[fmt], help="local CY4 / 3-fold comparison")
    dt3.add_argument("action", choices=("check",))
    dt3.add_argument("--f0", default="")
    dt3.add_argument("--f1", default="")
    dt3.add_argument("--rank", type=int, default=1)
    dt3.add_argument("--fixed", default="1")
    dt3.set_defaults(func=cmd_dt3)

    sq = sub.add_parser("sq", parents=[fmt], help="Catalan square-root polynomial Sq_k")
    sq.add_argument("--k", type=int, required=True)
    sq.set_defaults(func=cmd_sq)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (SchemaError, ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except InternalConventionError as exc:
        print(f"convention error: {exc}", file=sys.stderr)
        return EXIT_CONVENTION
    except ValidationError as exc:
        text = exc.message if exc.code in exc.message else f"{exc.code}: {exc.message}"
        print(f"validation error: {text}", file=sys.stderr)
        return EXIT_VALIDATION
    except SqrtEulerError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())

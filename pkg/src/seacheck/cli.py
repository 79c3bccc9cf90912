"""Command-line front end.

Usage::

    seacheck check --model e0 --n0 2 --window 4
    seacheck uniqueness --model e0 --n0 2 --n 2 --window 4
    seacheck closure --model boolean --k 3 '{1}'
    seacheck check --file table.ea --format json

Models: ``--model boolean|scale|hs|e0|chain`` (``--k`` for boolean/chain,
``--n0`` for e0) or ``--file PATH`` in the finite text format documented in
:mod:`seacheck.models`.  ``--window`` is the largest first index for e0 and
the largest denominator for scale/hs; finite models always use the whole
carrier.

Element syntax: ``0``, ``1``, ``a:2,1``, ``b:0,3`` (e0), ``L:1/2``,
``R:1/3`` (hs), ``1/4`` (scale), ``{1.3}`` (boolean), or any label of a
loaded table.

Exit codes: 0 nothing found, 1 violations or inconsistencies found, 2 usage
or model error.  ``--format json`` prints one JSON document with the keys
command, model, window, violations, cases, closure and timing (null unless
``--timing`` is given, so repeated runs are byte-identical).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .analysis import (NotCommutativeError, check_theorem1, commutant, generate_sub_sea,
                       inconsistent_cases, is_sub_sea, uniqueness_search)
from .core import AuditReport, ModelError, audit_ea
from .models import builtin, dump_finite, format_circ, load_finite
from .search import enumerate_products
from .sequential import audit_derived, audit_sea, is_sharp, noncommuting_pair, sharp_via_meet

DEFAULT_E0_WINDOW = 6
DEFAULT_DENOMINATOR = 8


class UsageError(Exception):
    pass


def _add_common(p):
    src = p.add_mutually_exclusive_group()
    src.add_argument("--model", choices=["boolean", "scale", "hs", "e0", "chain"], default=None)
    src.add_argument("--file", default=None, help="finite model table")
    p.add_argument("--n0", type=int, default=2, help="E0 parameter (>= 2)")
    p.add_argument("--k", type=int, default=2, help="boolean atoms / chain steps")
    p.add_argument("--window", type=int, default=None,
                   help="E0: max first index; rational models: max denominator")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--timing", action="store_true", help="record elapsed time in json output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="seacheck",
                                     description="Audit and analyse sequential effect algebras.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("check", help="audit EA1-EA4 and SEA1-SEA5 over the window")
    _add_common(p)
    p.add_argument("--derived", action="store_true", help="also run the cancellation/sharpness suites")

    p = sub.add_parser("closure", help="generated sub-algebra of the given elements")
    _add_common(p)
    p.add_argument("elements", nargs="+")
    p.add_argument("--max-iterations", type=int, default=64)
    p.add_argument("--max-size", type=int, default=10000)

    p = sub.add_parser("sharp", help="sharpness by idempotence and by meet")
    _add_common(p)
    p.add_argument("elements", nargs="*", help="default: the whole window")

    p = sub.add_parser("commutant", help="window elements commuting with all given elements")
    _add_common(p)
    p.add_argument("elements", nargs="*")

    p = sub.add_parser("uniqueness", help="search n*a = n*b cases")
    _add_common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--all", action="store_true", help="list cases with a = b too")

    p = sub.add_parser("enum-products", help="all sequential products on a finite effect algebra")
    _add_common(p)
    p.add_argument("--max-solutions", type=int, default=None)

    p = sub.add_parser("describe", help="summarise a model")
    _add_common(p)
    return parser


def _model(args):
    if args.file:
        return load_finite(args.file)
    return builtin(args.model or "e0", n0=args.n0, k=args.k)


def _window(model, args):
    if model.finite:
        return model.window(), model.window_descriptor()
    bound = args.window
    if bound is None:
        bound = DEFAULT_E0_WINDOW if model.name.startswith("e0") else DEFAULT_DENOMINATOR
    return model.window(bound), model.window_descriptor(bound)


def _parse_elements(model, texts):
    return [model.parse(t) for t in texts]


def _command_record(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("format", "timing")}


def run(args, out=sys.stdout) -> int:
    started = time.perf_counter()
    model = _model(args)
    window, descriptor = _window(model, args)
    fmt = model.format
    doc = {
        "command": _command_record(args),
        "model": model.name,
        "window": descriptor,
        "violations": [],
        "cases": [],
        "closure": {},
        "timing": None,
    }
    text = []
    status = 0
    cmd = args.subcommand

    if cmd == "check":
        report = audit_ea(model, window, descriptor)
        axioms = "EA1-EA4"
        if model.has_product:
            report = report.merge(audit_sea(model, window, descriptor))
            axioms += ", SEA1-SEA5"
            if args.derived:
                report = report.merge(audit_derived(model, window, descriptor))
                axioms += ", CANCEL, SHARP, SHARP-ORDER"
        doc["report"] = report.to_dict(model)
        doc["violations"] = doc["report"]["violations"]
        text.append(f"{model.name} ({descriptor}): {axioms}: {len(report.violations)} violations, "
                    f"{report.checked_tuples} tuples checked")
        text += ["  " + line for line in report.format_lines(model)]
        status = 1 if report.violations else 0

    elif cmd == "closure":
        A = _parse_elements(model, args.elements)
        result = generate_sub_sea(model, A, args.max_iterations, args.max_size)
        doc["closure"] = result.to_dict(model)
        closed, witness = is_sub_sea(model, result.elements)
        doc["closure"]["closed"] = closed
        pair = noncommuting_pair(model, A)
        doc["closure"]["generators_commute"] = pair is None
        state = ("fixpoint" if result.reached_fixpoint else
                 "size limit hit" if result.size_limit_hit else "iteration limit hit")
        text.append(f"closure of {{{', '.join(fmt(x) for x in sorted(set(A)))}}} in {model.name}: "
                    f"{len(result.elements)} elements after {result.iterations} iterations ({state})")
        for i, level in enumerate(result.levels, 1):
            text.append(f"  A{i} ({len(level)}): " + " ".join(fmt(x) for x in sorted(level)))
        if pair is None:
            t1 = check_theorem1(model, A, window, args.max_iterations, args.max_size)
            doc["commutative_closure"] = t1.to_dict(model)
            text.append(f"generators commute; closure commutative: {t1.closure_pair is None}; "
                        f"maximal extension check: {'pass' if t1.passed else 'FAIL'}")
            status = 0 if t1.passed else 1
        else:
            text.append(f"generators do not commute: {fmt(pair[0])}, {fmt(pair[1])}")

    elif cmd == "sharp":
        elements = _parse_elements(model, args.elements) if args.elements else window
        rows = []
        for x in sorted(set(elements)):
            idem = is_sharp(model, x)
            meet = sharp_via_meet(model, x, None if model.finite else window)
            rows.append({"element": fmt(x), "idempotent": idem,
                         "meet": "no-meet" if meet is None else meet})
            if meet is not None and meet != idem:
                status = 1
            text.append(f"{fmt(x):>12}  idempotent={'yes' if idem else 'no'}  "
                        f"meet={'no-meet' if meet is None else ('yes' if meet else 'no')}")
        doc["sharp"] = rows

    elif cmd == "commutant":
        A = _parse_elements(model, args.elements)
        result = sorted(commutant(model, A, window))
        doc["commutant"] = [fmt(x) for x in result]
        text.append(f"commutant ({len(result)} of {len(window)} window elements): "
                    + " ".join(fmt(x) for x in result))

    elif cmd == "uniqueness":
        if args.n < 2:
            raise UsageError("--n must be at least 2")
        cases = uniqueness_search(model, args.n, window)
        bad = inconsistent_cases(cases)
        doc["cases"] = [c.to_dict(model) for c in cases]
        doc["inconsistencies"] = [c.to_dict(model) for c in bad]
        shown = cases if args.all else [c for c in cases if not c.a_equals_b]
        text.append(f"{model.name} ({descriptor}), n={args.n}: {len(cases)} cases, "
                    f"{len(shown)} shown, {len(bad)} inconsistencies")
        text.append(f"{'a':>10} {'b':>10} {'c':>10}  sharp commute equal")
        yn = {True: "yes", False: "no"}
        for c in shown:
            text.append(f"{fmt(c.a):>10} {fmt(c.b):>10} {fmt(c.c):>10}  "
                        f"{yn[c.c_sharp]:>5} {yn[c.a_commutes_b]:>7} {yn[c.a_equals_b]:>5}"
                        + ("  INCONSISTENT" if c.inconsistent else ""))
        status = 1 if bad else 0

    elif cmd == "enum-products":
        if not model.finite:
            raise UsageError("enum-products needs a finite model")
        tables = enumerate_products(model, args.max_solutions)
        doc["products"] = [[[fmt(x) for x in row] for row in t] for t in tables]
        text.append(f"# {len(tables)} sequential products on {model.name}")
        for i, t in enumerate(tables, 1):
            text.append(f"# solution {i}")
            text += format_circ(model, t)

    elif cmd == "describe":
        sharp = [x for x in window if is_sharp(model, x)] if model.has_product else []
        info = {
            "finite": model.finite,
            "zero": fmt(model.zero),
            "one": fmt(model.one),
            "window_size": len(window),
            "has_product": model.has_product,
            "sharp_in_window": [fmt(x) for x in sharp],
        }
        doc["describe"] = info
        text.append(f"{model.name}: {'finite' if model.finite else 'symbolic'}, "
                    f"zero={info['zero']}, one={info['one']}")
        text.append(f"window ({descriptor}): {len(window)} elements")
        if model.has_product:
            text.append("sharp in window: " + " ".join(info["sharp_in_window"]))
        if model.finite:
            text.append(dump_finite(model).rstrip())

    if args.timing:
        doc["timing"] = {"seconds": round(time.perf_counter() - started, 6)}
    if args.format == "json":
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(text) + "\n")
    return status


def parse_report(model, document: str) -> AuditReport:
    """Rebuild the audit report from ``check --format json`` output."""
    return AuditReport.from_dict(model, json.loads(document)["report"])


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except (ModelError, UsageError, NotCommutativeError, KeyError, ValueError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"seacheck: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Exit codes: 0 success, 1 computation error, 2 input error. Errors are
reported as a JSON object ``{"error": {"type", "code", "message"}}`` on
stdout so scripts can parse them.
"""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction
from pathlib import Path

from eqclass import verify as verify_mod
from eqclass.builders import wproj_invariants
from eqclass.bundles import SplitBundle, total_class
from eqclass.errors import ComputationError, EqclassError, InputError
from eqclass.io import (
    build_datum,
    cyclotomic_report,
    dump_json,
    format_numeric,
    load_json_arg,
    parse_value,
    parse_weights,
    series_report,
    ycoeff_report,
)
from eqclass.localization import (
    LocalizationDatum,
    atiyah_singer_class,
    equivariant_chi_y,
    td_star_class,
)
from eqclass.quotient import IsolatedDefectDatum, WeightVector, chi_y_quotient, defect_sum, wproj_class
from eqclass.templates import CHERN
from eqclass.ycoeff import YCoeff

log = logging.getLogger("eqclass")


def _add_builder_args(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("input builder")
    g.add_argument("--builder", choices=("projective", "wproj-cover", "product", "raw"), help="how to build the datum")
    g.add_argument("--n", type=int, help="dimension of P^n (projective builder)")
    g.add_argument("--weights", help="comma-separated integer weights")
    g.add_argument("--conductor", type=int, help="order N of the cyclic group (projective builder)")
    g.add_argument("--input", help="builder or datum JSON: a file path or inline JSON")


def _add_output_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", help="write the result here instead of stdout")
    p.add_argument("--format", choices=("json", "pretty"), default="json")


def _add_norm_args(p: argparse.ArgumentParser) -> None:
    m = p.add_mutually_exclusive_group()
    m.add_argument("--normalized", dest="normalized", action="store_true", default=True)
    m.add_argument("--unnormalized", dest="normalized", action="store_false")


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="eqclass", description=__doc__.splitlines()[0])
    top.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("genus", help="equivariant chi_y-genus per group element")
    _add_builder_args(p)
    p.add_argument("--element", default="all", help="element label, or 'all'")
    p.add_argument("--y", help="also evaluate at this y (rational, or zeta:k/N)")
    p.add_argument("--twist", help="twisting bundles: {element: {component: bundle}}")
    _add_norm_args(p)
    _add_output_args(p)

    p = sub.add_parser("class", help="Atiyah-Singer class on every fixed component")
    _add_builder_args(p)
    p.add_argument("--element", default="all")
    p.add_argument("--kind", choices=("ty", "td", "euler"), default="ty")
    _add_norm_args(p)
    _add_output_args(p)

    p = sub.add_parser("quotient-genus", help="chi_y of the quotient X/G by averaging")
    _add_builder_args(p)
    _add_output_args(p)

    p = sub.add_parser("wproj-class", help="Hirzebruch class of a weighted projective space")
    p.add_argument("--weights", required=True)
    _add_norm_args(p)
    _add_output_args(p)

    p = sub.add_parser("defect", help="isolated fixed-point defect term")
    p.add_argument("--input", required=True, help="defect datum JSON (file or inline)")
    p.add_argument("--order", type=int, help="group order; defaults to the datum's group_order field")
    _add_output_args(p)

    p = sub.add_parser("specialize", help="evaluate a YCoeff JSON at a value of y")
    p.add_argument("--input", required=True, help="YCoeff JSON (file or inline)")
    p.add_argument("--y", required=True)
    _add_output_args(p)

    p = sub.add_parser("verify", help="run the acceptance suite")
    p.add_argument("--suite", default="all", help="'all' or comma-separated criterion names/numbers")
    p.add_argument("--timings", action="store_true", help="include wall-clock seconds (not deterministic)")
    _add_output_args(p)
    return top


def _datum_from_args(args) -> LocalizationDatum:
    builder = args.builder
    if builder is None:
        if args.input:
            builder = "raw"
        elif args.weights and args.n is None and args.conductor is None:
            builder = "wproj-cover"
        else:
            builder = "projective"
    if builder == "projective":
        if args.n is None or args.conductor is None or args.weights is None:
            raise InputError("projective builder needs --n, --weights and --conductor")
        return build_datum(
            {"projective_space": {"n": args.n, "weights": list(parse_weights(args.weights)), "conductor": args.conductor}}
        )
    if builder == "wproj-cover":
        if args.weights is None:
            raise InputError("wproj-cover builder needs --weights")
        return build_datum({"wproj": {"weights": list(parse_weights(args.weights))}})
    if not args.input:
        raise InputError(f"{builder} builder needs --input")
    spec = load_json_arg(args.input)
    if builder == "product" and "product" not in spec:
        raise InputError("product builder input must have a 'product' list")
    return build_datum(spec)


def _elements(d: LocalizationDatum, which: str) -> list[str]:
    if which == "all":
        return list(d.group.elements)
    out = [e.strip() for e in which.split(",")]
    for e in out:
        if e not in d.group:
            from eqclass.errors import UnknownElement

            raise UnknownElement(f"unknown group element {e!r}")
    return out


def _twist_from_args(args):
    if not args.twist:
        return None
    obj = load_json_arg(args.twist)
    if not isinstance(obj, dict):
        raise InputError("twist must be a JSON object {element: {component: bundle}}")

    def twist(g, c):
        per = obj.get(g, obj.get("*"))
        if per is None or c.label not in per:
            return SplitBundle.trivial(c.ring)
        return SplitBundle.from_json(per[c.label], c.ring)

    return twist


def cmd_genus(args) -> dict:
    d = _datum_from_args(args)
    twist = _twist_from_args(args)
    y = parse_value(args.y) if args.y is not None else None
    rows = []
    for g in _elements(d, args.element):
        log.info("genus for %s", g)
        chi = equivariant_chi_y(d, g, twist=twist, normalized=args.normalized)
        row = {"element": g, "genus": ycoeff_report(chi)}
        if y is not None:
            row["value"] = cyclotomic_report(chi.specialize(y))
        rows.append(row)
    out = {"command": "genus", "normalized": args.normalized, "elements": rows}
    if y is not None:
        out["y"] = args.y
    return out


def cmd_class(args) -> dict:
    d = _datum_from_args(args)
    rows = []
    for g in _elements(d, args.element):
        comps = []
        for c in d.components(g):
            if args.kind == "ty":
                s = atiyah_singer_class(c, args.normalized)
            elif args.kind == "td":
                s = td_star_class(c)
            else:
                s = total_class(c.tangent, CHERN)
            comps.append({"label": c.label, "dim": c.dim, "class": series_report(s), "integral": ycoeff_report(s.integrate())})
        rows.append({"element": g, "components": comps})
    return {"command": "class", "kind": args.kind, "normalized": args.normalized, "elements": rows}


def cmd_quotient_genus(args) -> dict:
    d = _datum_from_args(args)
    return {"command": "quotient-genus", "group_order": d.group.order, "genus": ycoeff_report(chi_y_quotient(d))}


def cmd_wproj_class(args) -> dict:
    w = WeightVector(parse_weights(args.weights))
    s = wproj_class(w, normalized=args.normalized)
    total = s.integrate()
    return {
        "command": "wproj-class",
        "weights": list(w.w),
        "invariants": wproj_invariants(w.w),
        "normalized": args.normalized,
        "class": series_report(s),
        "parts": [
            {"degree": k, "coefficient": ycoeff_report(s.terms.get((k,), YCoeff()))} for k in range(w.n + 1)
        ],
        "integral": ycoeff_report(total),
        "degree": ycoeff_report(total * Fraction(1, w.deg_pi)),
    }


def cmd_defect(args) -> dict:
    obj = load_json_arg(args.input)
    order = args.order if args.order is not None else obj.get("group_order") if isinstance(obj, dict) else None
    if order is None:
        raise InputError("group order missing: pass --order or a group_order field")
    if int(order) <= 0:
        raise InputError("group order must be positive")
    val = defect_sum(IsolatedDefectDatum.from_json(obj), int(order))
    return {"command": "defect", "group_order": int(order), "defect": ycoeff_report(val)}


def cmd_specialize(args) -> dict:
    c = YCoeff.from_json(load_json_arg(args.input))
    return {"command": "specialize", "y": args.y, "input": c.to_json(), "value": cyclotomic_report(c.specialize(parse_value(args.y)))}


def cmd_verify(args) -> dict:
    names = None if args.suite == "all" else [s.strip() for s in args.suite.split(",")]
    results = verify_mod.run_all(names)
    if names and not results:
        raise InputError(f"no criteria match {args.suite!r}")
    if not args.timings:
        for r in results:
            r.pop("seconds")
    return {"command": "verify", "suite": args.suite, "passed": all(r["passed"] for r in results), "results": results}


COMMANDS = {
    "genus": cmd_genus,
    "class": cmd_class,
    "quotient-genus": cmd_quotient_genus,
    "wproj-class": cmd_wproj_class,
    "defect": cmd_defect,
    "specialize": cmd_specialize,
    "verify": cmd_verify,
}


def _pretty_ycoeff(rep: dict) -> str:
    approx = ", ".join(f"y^{d}: {format_numeric(z)}" for d, z in rep["numeric"])
    return f"{rep['text']}    [{approx or '0'}]"


def render_pretty(result: dict) -> str:
    cmd = result["command"]
    lines = []
    if cmd == "genus":
        for row in result["elements"]:
            line = f"{row['element']}: {_pretty_ycoeff(row['genus'])}"
            if "value" in row:
                line += f"    at y={result['y']}: {row['value']['text']} ~ {format_numeric(row['value']['numeric'])}"
            lines.append(line)
    elif cmd == "class":
        for row in result["elements"]:
            lines.append(f"{row['element']}:")
            for c in row["components"]:
                lines.append(f"  {c['label']} (dim {c['dim']}): {c['class']['text']}")
                lines.append(f"    integral: {_pretty_ycoeff(c['integral'])}")
    elif cmd == "quotient-genus":
        lines.append(f"chi_y(X/G), |G| = {result['group_order']}: {_pretty_ycoeff(result['genus'])}")
    elif cmd == "wproj-class":
        lines.append(f"P({','.join(map(str, result['weights']))}), deg pi = {result['invariants']['deg_pi']}")
        lines.append(f"class: {result['class']['text']}")
        for part in result["parts"]:
            lines.append(f"  x^{part['degree']}: {_pretty_ycoeff(part['coefficient'])}")
        lines.append(f"integral: {_pretty_ycoeff(result['integral'])}")
        lines.append(f"degree: {_pretty_ycoeff(result['degree'])}")
    elif cmd == "defect":
        lines.append(f"defect: {_pretty_ycoeff(result['defect'])}")
    elif cmd == "specialize":
        v = result["value"]
        lines.append(f"y={result['y']}: {v['text']} ~ {format_numeric(v['numeric'])}")
    elif cmd == "verify":
        for r in result["results"]:
            mark = "PASS" if r["passed"] else "FAIL"
            timing = f" ({r['seconds']:.2f}s)" if "seconds" in r else ""
            lines.append(f"[{mark}] {r['criterion']:2d} {r['name']}{timing}: {r['detail']}")
        lines.append("all passed" if result["passed"] else "FAILURES")
    return "\n".join(lines) + "\n"


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _error_json(exc: Exception) -> str:
    return dump_json(
        {"error": {"type": type(exc).__name__, "code": getattr(exc, "code", "internal"), "message": str(exc)}}
    )


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        result = COMMANDS[args.command](args)
    except InputError as exc:
        sys.stdout.write(_error_json(exc))
        return 2
    except (ComputationError, EqclassError, ZeroDivisionError) as exc:
        sys.stdout.write(_error_json(exc))
        return 1
    text = dump_json(result) if args.format == "json" else render_pretty(result)
    try:
        _emit(text, args.output)
    except OSError as exc:
        sys.stdout.write(_error_json(InputError(f"cannot write {args.output}: {exc}")))
        return 2
    if args.command == "verify" and not result["passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

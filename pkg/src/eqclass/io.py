"""JSON input builders, canonical dumping and human-readable reports.

Exact values are always serialized exactly; the ``numeric`` fields next to
them are float renderings for reading only and are never parsed back.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from pathlib import Path

from eqclass.builders import projective_datum, wproj_cover_datum
from eqclass.cyclotomic import Cyclotomic
from eqclass.errors import InputError, InvalidWeights
from eqclass.localization import LocalizationDatum, exterior_product
from eqclass.series import TruncSeries
from eqclass.ycoeff import YCoeff

__all__ = [
    "dump_json",
    "load_json_arg",
    "build_datum",
    "parse_weights",
    "parse_value",
    "cyclotomic_report",
    "ycoeff_report",
    "series_report",
]


def dump_json(obj) -> str:
    """The one canonical serialization: two-space indent, insertion order, trailing newline."""
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def load_json_arg(arg: str):
    """Parse ``arg`` as inline JSON if it looks like JSON, else read it as a file path."""
    text = arg.strip()
    try:
        if text[:1] in "{[":
            return json.loads(text)
        return json.loads(Path(arg).read_text())
    except FileNotFoundError as exc:
        raise InputError(f"no such input file: {arg}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {arg!r}: {exc}") from exc


def parse_weights(text) -> tuple[int, ...]:
    if isinstance(text, (list, tuple)):
        items = list(text)
    else:
        items = [p for p in str(text).split(",") if p.strip()]
    try:
        w = tuple(int(x) for x in items)
    except (TypeError, ValueError) as exc:
        raise InvalidWeights(f"weights must be integers, got {text!r}") from exc
    if not w:
        raise InvalidWeights("empty weight list")
    return w


def parse_value(text: str):
    """A y-value: a rational such as ``-1`` or ``1/2``, or ``zeta:k/N`` for exp(2 pi i k/N)."""
    text = text.strip()
    if text.startswith("zeta:"):
        from eqclass.cyclotomic import root_of_unity

        try:
            return root_of_unity(Fraction(text[5:]))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"invalid root of unity {text!r}") from exc
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"invalid value {text!r}") from exc


def build_datum(spec) -> LocalizationDatum:
    """Build a datum from a builder object or a raw serialized datum."""
    if not isinstance(spec, dict):
        raise InputError("builder must be a JSON object")
    if "projective_space" in spec:
        p = spec["projective_space"]
        try:
            n = int(p["n"])
            N = int(p["conductor"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"projective_space needs integer n and conductor: {exc}") from exc
        return projective_datum(n, parse_weights(p.get("weights", [])), N)
    if "wproj" in spec:
        return wproj_cover_datum(parse_weights(spec["wproj"].get("weights", [])))
    if "product" in spec:
        parts = spec["product"]
        if not isinstance(parts, list) or len(parts) < 1:
            raise InputError("product needs a non-empty list of builders")
        out = build_datum(parts[0])
        for p in parts[1:]:
            out = exterior_product(out, build_datum(p))
        return out
    if "raw" in spec:
        return LocalizationDatum.from_json(spec["raw"])
    if "group" in spec and "fixed_data" in spec:
        return LocalizationDatum.from_json(spec)
    raise InputError(f"unknown builder keys {sorted(spec)}")


def _num(x: float) -> float:
    x = round(x, 12)
    return 0.0 if x == 0 else x


def _complex(z: complex) -> list[float]:
    return [_num(z.real), _num(z.imag)]


def cyclotomic_report(c: Cyclotomic) -> dict:
    return {"exact": c.to_json(), "text": str(c), "numeric": _complex(c.embed())}


def ycoeff_report(c: YCoeff) -> dict:
    return {
        "exact": c.to_json(),
        "text": str(c),
        "numeric": [[d, _complex(c.terms[d].embed())] for d in sorted(c.terms)],
    }


def series_report(s: TruncSeries) -> dict:
    return {"exact": s.to_json(), "text": str(s)}


def format_numeric(pair) -> str:
    re, im = pair
    if im == 0:
        return f"{re:.6g}"
    sign = "-" if math.copysign(1, im) < 0 else "+"
    return f"{re:.6g}{sign}{abs(im):.6g}i"

"""Bundled example data."""

from __future__ import annotations

import json
from importlib import resources

from eqclass.localization import LocalizationDatum


def load_json(name: str) -> dict:
    return json.loads(resources.files("eqclass.data").joinpath(name).read_text())


def parse_relabel(entries) -> dict:
    return {(e["from"], e["to"]): dict(e["map"]) for e in entries}


def s3_on_p2() -> tuple[LocalizationDatum, dict]:
    """S_3 permuting coordinates of P^2, with the conjugation relabeling of fixed components."""
    obj = load_json("s3_p2.json")
    return LocalizationDatum.from_json(obj["datum"]), parse_relabel(obj["relabel"])

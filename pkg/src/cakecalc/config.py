"""Valuation config files (JSON).

Schema:

    {
      "atoms":          [{"at": "1/2", "weight": "1/2"}, ...],
      "density_pieces": [{"support": "[0,1/6)", "boxes": 2}, ...]
                        -- or, exclusively --
                        [{"support": "[0,1]", "density": "1/4"}, ...],
      "cantor":         [{"support": "[0,1]", "p": "1/3", "weight": "1/4"}, ...]
    }

Rationals are strings "p/q".  Box counts and explicit densities are mutually
exclusive per file; the box form describes the whole valuation (it normalizes
itself to mass 1), so it cannot be combined with atoms or Cantor components.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .errors import CakeError, ParseError
from .intervals import Interval, parse_interval_set, parse_rational
from .valuation import CantorComponent, Valuation, make_box_valuation, make_valuation

BUNDLED = ("fig2", "uniform", "dirac", "cantor_mix")


def _parse_interval(text: str) -> Interval:
    ivset = parse_interval_set(text)
    if len(ivset) != 1:
        raise ParseError(f"expected a single interval, got {text!r}")
    return ivset.components[0]


def valuation_from_dict(data: dict) -> Valuation:
    if not isinstance(data, dict):
        raise ParseError("config root must be a JSON object")
    atoms = [
        (parse_rational(a["at"]), parse_rational(a["weight"]))
        for a in data.get("atoms", [])
    ]
    cantor_parts = [
        CantorComponent(
            _parse_interval(c["support"]),
            parse_rational(c["p"]),
            parse_rational(c["weight"]),
        )
        for c in data.get("cantor", [])
    ]
    pieces = data.get("density_pieces", [])
    kinds = {("boxes" in p, "density" in p) for p in pieces}
    if len(kinds) > 1 or (True, True) in kinds:
        raise ParseError("density_pieces must use either 'boxes' or 'density', not both")
    if pieces and "boxes" in pieces[0]:
        if atoms or cantor_parts:
            raise ParseError("box-count form cannot be combined with atoms or cantor")
        return make_box_valuation(
            [(_parse_interval(p["support"]), int(p["boxes"])) for p in pieces]
        )
    density = [
        (_parse_interval(p["support"]), parse_rational(p["density"])) for p in pieces
    ]
    return make_valuation(atoms=atoms, density=density, cantor_parts=cantor_parts)


def load_valuation(path) -> Valuation:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read config {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON in {path}: {exc}") from exc
    try:
        return valuation_from_dict(data)
    except KeyError as exc:
        raise ParseError(f"missing field {exc} in {path}") from exc


def bundled_config_path(name: str) -> Path:
    """Path to one of the bundled example configs (fig2, uniform, dirac,
    cantor_mix)."""
    if name not in BUNDLED:
        raise ParseError(f"unknown bundled config {name!r}; available: {BUNDLED}")
    return Path(str(resources.files("cakecalc").joinpath("configs", f"{name}.json")))

"""JSON request parsing.

Request documents look like::

    {
      "surface": {"preset": "cp2"},
      "curve": [5],
      "cusps": [{"gens": [4, 5]}],
      "mode": "topological",
      "scan": {"ray": {"direction": [1], "from": 0, "to": 2}},
      "flags": {"statementForm": false, "assumeNonvanishing": false}
    }

A user surface replaces the preset with ``gram``, ``K``, ``b1``, ``pg``,
optional ``kind`` (``projective`` or ``almost-complex``) and an optional
``h0Table`` of ``{"class": [...], "h0": n}`` rows.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import InputError
from .lattice import PROJECTIVE, SurfaceData, from_preset
from .obstruction import TOPOLOGICAL, CheckRequest, ScanSpec
from .rfunction import Configuration
from .semigroup import CuspDescriptor

_FLAG_NAMES = {"statementForm", "assumeNonvanishing"}


def load_json(path) -> dict:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise InputError(f"{path}: top level must be a JSON object")
    return data


def int_list(value, what: str) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool)
                                              for x in value):
        raise InputError(f"{what} must be a list of integers, got {value!r}")
    return value


def parse_surface(data: dict) -> SurfaceData:
    if not isinstance(data, dict):
        raise InputError("surface must be an object")
    if "preset" in data:
        return from_preset(str(data["preset"]))
    try:
        gram = data["gram"]
        K = int_list(data["K"], "surface.K")
    except KeyError as exc:
        raise InputError(f"surface is missing {exc}") from None
    if not isinstance(gram, list) or not gram:
        raise InputError("surface.gram must be a nonempty list of rows")
    gram = [int_list(row, "surface.gram row") for row in gram]
    table = None
    if "h0Table" in data:
        table = {}
        for row in data["h0Table"]:
            try:
                table[tuple(int_list(row["class"], "h0Table class"))] = int(row["h0"])
            except (KeyError, TypeError) as exc:
                raise InputError(f"bad h0Table row {row!r}: {exc}") from None
    return SurfaceData(gram=gram, K=K, b1=int(data.get("b1", 0)), pg=int(data.get("pg", 0)),
                       kind=data.get("kind", PROJECTIVE), h0_table=table)


def parse_cusps(entries) -> Configuration:
    if not isinstance(entries, list) or not entries:
        raise InputError("cusps must be a nonempty list")
    return Configuration.from_descriptors(CuspDescriptor.from_dict(e) for e in entries)


def parse_flags(data: dict) -> dict:
    flags = data.get("flags", {}) or {}
    unknown = set(flags) - _FLAG_NAMES
    if unknown:
        raise InputError(f"unknown flags {sorted(unknown)}")
    return {"statement_form": bool(flags.get("statementForm", False)),
            "assume_nonvanishing": bool(flags.get("assumeNonvanishing", False))}


def parse_request(data: dict) -> CheckRequest:
    for key in ("surface", "curve", "cusps", "scan"):
        if key not in data:
            raise InputError(f"request is missing {key!r}")
    surface = parse_surface(data["surface"])
    return CheckRequest(surface=surface, C=int_list(data["curve"], "curve"),
                        cfg=parse_cusps(data["cusps"]), scan=ScanSpec.from_dict(data["scan"]),
                        mode=data.get("mode", TOPOLOGICAL), **parse_flags(data))

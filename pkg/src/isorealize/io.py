"""JSON formats for spaces, Katetov maps, isometry groups, groups, provenance and reports.

All numbers that can be fractional are written as reduced fraction strings.
"""
from __future__ import annotations

import json
from pathlib import Path

from .exceptions import IsorealizeError, MalformedMatrix, ProvenanceError
from .groups import GroupSpec
from .iso_search import IsoGroup
from .katetov import KatetovMap
from .metric import FiniteMetricSpace, format_fraction, parse_fraction, validate_space
from .realize import PointRecord


class InputError(IsorealizeError, ValueError):
    """A file could not be read or does not match its format."""


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def load_json(path):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def write_json(path, obj) -> None:
    Path(path).write_text(dumps(obj))


# -- metric spaces -----------------------------------------------------------


def space_to_json(space: FiniteMetricSpace) -> dict:
    return {"labels": list(space.labels), "d": [[format_fraction(v) for v in row] for row in space.d]}


def space_from_json(data) -> FiniteMetricSpace:
    if not isinstance(data, dict) or set(data) != {"labels", "d"}:
        raise MalformedMatrix("metric-space JSON needs exactly the keys 'labels' and 'd'")
    labels, rows = data["labels"], data["d"]
    if not isinstance(labels, list) or not all(isinstance(lbl, str) for lbl in labels):
        raise MalformedMatrix("'labels' must be a list of strings")
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise MalformedMatrix("'d' must be a list of rows")
    return validate_space(labels, [[parse_fraction(v) for v in row] for row in rows])


# -- Katetov maps ------------------------------------------------------------


def katetov_to_json(f: KatetovMap) -> dict:
    return {"base_labels": list(f.base.labels), "values": [format_fraction(v) for v in f.values]}


def katetov_from_json(data, base: FiniteMetricSpace) -> KatetovMap:
    if list(data.get("base_labels", [])) != list(base.labels):
        raise InputError("Katetov map base labels do not match the space")
    return KatetovMap(base, [parse_fraction(v) for v in data["values"]])


# -- isometry groups ---------------------------------------------------------


def isogroup_to_json(group: IsoGroup) -> dict:
    return group.to_json()


def isogroup_from_json(data, space: FiniteMetricSpace) -> IsoGroup:
    if data.get("n") != space.n:
        raise InputError("isometry group size does not match the space")
    return IsoGroup.from_perms(space, data["elements"])


# -- groups and provenance ----------------------------------------------------


def group_spec_from_json(data) -> GroupSpec:
    return GroupSpec.from_json(data)


def provenance_to_json(records) -> list:
    return [rec.to_json() for rec in records]


def provenance_from_json(data) -> list:
    if not isinstance(data, list):
        raise ProvenanceError("provenance JSON must be a list of point records")
    return [PointRecord.from_json(item) for item in data]

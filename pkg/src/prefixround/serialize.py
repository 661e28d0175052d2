"""JSON/CSV encodings for instances, assignments, and schedules.

Numbers serialize through :func:`prefixround.numeric.format_number`:
rationals become "p/q" strings, floats stay floats, and an open-ended
closing time becomes "inf".  Parsing materializes numbers in the active
numeric mode, so the same file loads as rationals or floats depending on
the caller.  All sequence indices in files are 1-based.
"""

from __future__ import annotations

import csv
import io
import json
import math
from typing import List, Sequence, Tuple

from .core import (FractionalAssignment, IntegralAssignment, ValidationError,
                   WeightVector)
from .numeric import Scalar, format_number, parse_number
from .scheduling import SchedulingInstance


def _require(obj: dict, key: str, where: str):
    if key not in obj:
        raise ValidationError(f"{where} is missing the {key!r} field")
    return obj[key]


# -- rounding instances ------------------------------------------------------

def matrix_to_dict(x: FractionalAssignment, d: WeightVector) -> dict:
    return {
        "m": x.m,
        "n": x.n,
        "d": [format_number(v) for v in d.values],
        "x": [[format_number(v) for v in row] for row in x.entries],
    }


def matrix_from_dict(obj: dict) -> Tuple[FractionalAssignment, WeightVector]:
    m = _require(obj, "m", "instance")
    n = _require(obj, "n", "instance")
    raw_x = _require(obj, "x", "instance")
    raw_d = _require(obj, "d", "instance")
    if len(raw_x) != m or any(len(row) != n for row in raw_x):
        raise ValidationError(f"x must be {m} rows of {n} entries")
    if len(raw_d) != n:
        raise ValidationError(f"d must have {n} entries")
    x = FractionalAssignment.from_rows(
        [[parse_number(v) for v in row] for row in raw_x], convert=False)
    d = WeightVector.from_values([parse_number(v) for v in raw_d], convert=False)
    return x, d


def matrix_to_csv(x: FractionalAssignment, d: WeightVector) -> str:
    """One "d" row then m "x" rows, every value stringified."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["d"] + [str(format_number(v)) for v in d.values])
    for row in x.entries:
        writer.writerow(["x"] + [str(format_number(v)) for v in row])
    return buf.getvalue()


def _parse_cell(text: str) -> Scalar:
    try:
        return parse_number(text.strip())
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ValidationError(f"bad number {text!r}: {exc}") from None


def matrix_from_csv(text: str) -> Tuple[FractionalAssignment, WeightVector]:
    weights: List[Scalar] = []
    rows: List[List[Scalar]] = []
    for record in csv.reader(io.StringIO(text)):
        if not record or not record[0].strip():
            continue
        label, cells = record[0].strip(), record[1:]
        if label == "d":
            if weights:
                raise ValidationError("duplicate d row")
            weights = [_parse_cell(c) for c in cells]
        elif label == "x":
            rows.append([_parse_cell(c) for c in cells])
        else:
            raise ValidationError(f"unknown row label {label!r}")
    if not weights:
        raise ValidationError("missing d row")
    if not rows:
        raise ValidationError("missing x rows")
    if any(len(r) != len(weights) for r in rows):
        raise ValidationError("every x row must match the d row length")
    x = FractionalAssignment.from_rows(rows, convert=False)
    d = WeightVector.from_values(weights, convert=False)
    return x, d


# -- assignments and open times ----------------------------------------------

def assignment_to_dict(y: IntegralAssignment) -> dict:
    return {"s": list(y.to_one_based())}


def assignment_from_dict(obj: dict) -> IntegralAssignment:
    seq = _require(obj, "s", "assignment")
    return IntegralAssignment.from_one_based(seq)


def open_times_to_dict(open_from: Sequence[int]) -> dict:
    """``open_from`` holds 0-based first-open column indices; n means never."""
    return {"a": [int(a) + 1 for a in open_from]}


def open_times_from_dict(obj: dict) -> Tuple[int, ...]:
    seq = _require(obj, "a", "open times")
    out = []
    for i, a in enumerate(seq):
        if not isinstance(a, int) or isinstance(a, bool) or a < 1:
            raise ValidationError(f"open time {i + 1} must be a positive integer")
        out.append(a - 1)
    return tuple(out)


# -- scheduling instances ------------------------------------------------------

def scheduling_to_dict(inst: SchedulingInstance) -> dict:
    return {
        "machines": [{"b": format_number(b)} for b in inst.closing],
        "jobs": [{"r": format_number(r), "d": format_number(d)}
                 for r, d in zip(inst.release, inst.work)],
    }


def _parse_closing(value) -> Scalar:
    if value == "inf" or (isinstance(value, float) and math.isinf(value)):
        return math.inf
    return parse_number(value)


def scheduling_from_dict(obj: dict) -> SchedulingInstance:
    machines = _require(obj, "machines", "instance")
    jobs = _require(obj, "jobs", "instance")
    closing = [_parse_closing(_require(mc, "b", f"machine {i + 1}"))
               for i, mc in enumerate(machines)]
    release = [parse_number(_require(jb, "r", f"job {j + 1}")) for j, jb in enumerate(jobs)]
    work = [parse_number(_require(jb, "d", f"job {j + 1}")) for j, jb in enumerate(jobs)]
    return SchedulingInstance.build(closing, release, work)


# -- json text helpers ---------------------------------------------------------

def to_json(obj: dict) -> str:
    """Stable, human-diffable rendering (keys stay in insertion order)."""
    return json.dumps(obj, indent=2) + "\n"


def from_json(text: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise ValidationError("expected a JSON object at the top level")
    return obj

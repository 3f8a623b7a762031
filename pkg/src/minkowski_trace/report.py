"""Inequality reports and their flat JSON/CSV records."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from enum import Enum

SLACK_RTOL = 1e-9

REPORT_FIELDS = (
    "p", "x", "n", "m", "padding", "lhs", "rhs",
    "j_value", "margin", "direction", "satisfied",
)


class Direction(str, Enum):
    LE = "LE"  # lhs <= rhs, p > 1
    GE = "GE"  # lhs >= rhs, 0 < p < 1
    EQ = "EQ"  # lhs == rhs, p == 1


def direction_for(p: float) -> Direction:
    if p > 1:
        return Direction.LE
    if p < 1:
        return Direction.GE
    return Direction.EQ


@dataclass(frozen=True)
class InequalityReport:
    """Both sides of one inequality check and whether it held.

    ``margin`` is ``rhs - lhs`` for LE, ``lhs - rhs`` for GE and
    ``-|lhs - rhs|`` for EQ; the check is satisfied when
    ``margin >= -tol * max(1, lhs, rhs)``.  ``j_value`` is always
    ``rhs - lhs``.
    """

    p: float
    x: float
    n: int
    m: int
    padding: int
    lhs: float
    rhs: float
    direction: Direction
    margin: float
    j_value: float
    satisfied: bool

    def as_record(self) -> dict:
        rec = {name: getattr(self, name) for name in REPORT_FIELDS}
        rec["direction"] = self.direction.value
        return rec


def make_report(lhs, rhs, p, *, x=0.0, n, m, padding=0, tol=SLACK_RTOL) -> InequalityReport:
    lhs, rhs, p = float(lhs), float(rhs), float(p)
    direction = direction_for(p)
    if direction is Direction.LE:
        margin = rhs - lhs
    elif direction is Direction.GE:
        margin = lhs - rhs
    else:
        margin = -abs(lhs - rhs)
    slack = tol * max(1.0, lhs, rhs)
    return InequalityReport(
        p=p, x=float(x), n=int(n), m=int(m), padding=int(padding),
        lhs=lhs, rhs=rhs, direction=direction, margin=margin,
        j_value=rhs - lhs, satisfied=bool(margin >= -slack),
    )


def _json_safe(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def records_to_json(records, indent=2, single=False) -> str:
    """JSON array of records, or the lone record itself when ``single``."""
    records = [{k: _json_safe(v) for k, v in r.items()} for r in records]
    return json.dumps(records[0] if single else records, indent=indent)


def records_to_csv(records, fieldnames=None) -> str:
    records = list(records)
    if fieldnames is None:
        fieldnames = list(records[0]) if records else list(REPORT_FIELDS)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    writer.writerows(records)
    return buf.getvalue()

"""Check reports: one verdict per (instance, predicate), serialized as JSON lines or CSV."""

from __future__ import annotations

import csv
import datetime as _dt
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable

PASS, FAIL, SKIP = "pass", "fail", "skip"


def exact_str(value: Any) -> str:
    """Decimal string for integers, ``p/q`` for non-integral rationals."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    return str(value)


@dataclass
class CheckReport:
    predicate: str
    instance: Any
    verdict: str
    values: dict[str, str] = field(default_factory=dict)
    witness: Any = None
    timestamp: str | None = None

    def __post_init__(self):
        if self.verdict not in (PASS, FAIL, SKIP):
            raise ValueError(f"unknown verdict {self.verdict!r}")
        self.values = {k: exact_str(v) for k, v in self.values.items()}

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    @property
    def instance_id(self) -> str:
        if isinstance(self.instance, str):
            return self.instance
        return json.dumps(self.instance, sort_keys=True, separators=(",", ":"))

    def stamp(self) -> "CheckReport":
        self.timestamp = _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")
        return self

    def to_dict(self) -> dict:
        d = {
            "predicate": self.predicate,
            "instance": self.instance,
            "verdict": self.verdict,
            "values": self.values,
        }
        if self.witness is not None:
            d["witness"] = self.witness
        if self.timestamp is not None:
            d["timestamp"] = self.timestamp
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "CheckReport":
        return cls(d["predicate"], d["instance"], d["verdict"], dict(d.get("values", {})),
                   d.get("witness"), d.get("timestamp"))


def sort_reports(reports: Iterable[CheckReport]) -> list[CheckReport]:
    return sorted(reports, key=lambda r: (r.instance_id, r.predicate))


def reports_to_csv(reports: Iterable[CheckReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["instance", "predicate", "verdict", "values"])
    for r in reports:
        vals = ";".join(f"{k}={v}" for k, v in sorted(r.values.items()))
        writer.writerow([r.instance_id, r.predicate, r.verdict, vals])
    return buf.getvalue()

"""Report records and their table / CSV / JSON renderings.

A report is a flat list of records ``(field, value, source)``; every
rendering is produced from the same list, so the formats agree value for
value. Integers and rationals are stored as exact strings ("7", "3/5"), with
a decimal rendering alongside rationals.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

SCHEMA = "matchwise/1"


@dataclass(frozen=True)
class Record:
    field: str
    value: str
    source: str = ""
    decimal: str = ""


def exact(x) -> tuple[str, str]:
    """Exact string and decimal rendering of an int, Fraction or float."""
    if isinstance(x, bool):
        return ("true" if x else "false"), ""
    if isinstance(x, int):
        return str(x), ""
    if isinstance(x, Fraction):
        text = str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return text, f"{float(x):.6f}"
    if isinstance(x, float):
        return repr(x), f"{x:.6f}"
    return str(x), ""


@dataclass
class Report:
    command: str
    inputs: dict[str, str] = field(default_factory=dict)
    records: list[Record] = field(default_factory=list)
    timing: float | None = None

    def add(self, name: str, value, source: str = "") -> None:
        text, dec = exact(value)
        self.records.append(Record(name, text, source, dec))

    def to_dict(self) -> dict:
        out = {
            "schema": SCHEMA,
            "command": self.command,
            "inputs": dict(self.inputs),
            "outputs": [
                {k: v for k, v in (("field", r.field), ("value", r.value),
                                   ("source", r.source), ("decimal", r.decimal)) if v != "" or k == "value"}
                for r in self.records
            ],
        }
        if self.timing is not None:
            out["timing"] = {"seconds": f"{self.timing:.3f}"}
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["field", "value", "source", "decimal"])
        for r in self.records:
            w.writerow([r.field, r.value, r.source, r.decimal])
        return buf.getvalue()

    def to_table(self) -> str:
        lines = [f"# {self.command}"]
        for k, v in self.inputs.items():
            lines.append(f"# input {k} = {v}")
        rows = [("field", "value", "source", "decimal")] + \
               [(r.field, r.value, r.source, r.decimal) for r in self.records]
        widths = [max(len(row[i]) for row in rows) for i in range(4)]
        for row in rows:
            lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        if self.timing is not None:
            lines.append(f"# {self.timing:.3f} s")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json() + "\n"
        if fmt == "csv":
            return self.to_csv()
        return self.to_table()


def from_dict(data: dict) -> Report:
    """Rebuild a report from its JSON form."""
    if data.get("schema") != SCHEMA:
        raise ValueError(f"unsupported report schema {data.get('schema')!r}")
    rep = Report(data["command"], dict(data["inputs"]))
    for r in data["outputs"]:
        rep.records.append(Record(r["field"], r["value"], r.get("source", ""), r.get("decimal", "")))
    if "timing" in data:
        rep.timing = float(data["timing"]["seconds"])
    return rep

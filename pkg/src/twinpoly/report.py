"""CountReport records and their CSV / JSON / markdown renderings.

Machine formats carry exact values (rationals as "num/den"); only the
human-readable table rounds, to 6 significant digits.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, fields
from fractions import Fraction

FIELDS = ("d", "q", "shifts", "brute_count", "formula_count", "prediction", "rel_error")
CSV_HEADER = ",".join(FIELDS)


def fmt_rational(x) -> str:
    if x is None:
        return ""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text: str):
    text = text.strip()
    return None if text == "" else Fraction(text)


def fmt_decimal(x, digits: int = 6) -> str:
    if x is None:
        return "-"
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{float(x):.{digits}g}"


def _opt_int(text: str):
    text = text.strip()
    return None if text == "" else int(text)


@dataclass(frozen=True)
class CountReport:
    d: int
    q: int
    shifts: tuple[str, ...]
    brute_count: int | None = None
    formula_count: int | None = None
    prediction: Fraction | None = None
    rel_error: Fraction | None = None

    def row(self) -> list[str]:
        return [str(self.d), str(self.q), ";".join(self.shifts),
                "" if self.brute_count is None else str(self.brute_count),
                "" if self.formula_count is None else str(self.formula_count),
                fmt_rational(self.prediction), fmt_rational(self.rel_error)]

    def as_dict(self) -> dict:
        return dict(zip(FIELDS, [self.d, self.q, list(self.shifts), self.brute_count,
                                 self.formula_count, fmt_rational(self.prediction) or None,
                                 fmt_rational(self.rel_error) or None]))

    @classmethod
    def from_dict(cls, obj: dict) -> "CountReport":
        if set(obj) != set(FIELDS):
            raise ValueError(f"expected keys {FIELDS}, got {sorted(obj)}")
        return cls(int(obj["d"]), int(obj["q"]), tuple(obj["shifts"]),
                   obj["brute_count"], obj["formula_count"],
                   parse_rational(obj["prediction"] or ""),
                   parse_rational(obj["rel_error"] or ""))

    @classmethod
    def from_row(cls, row: list[str]) -> "CountReport":
        if len(row) != len(FIELDS):
            raise ValueError(f"expected {len(FIELDS)} columns, got {len(row)}")
        d, q, shifts, brute, formula, pred, err = row
        return cls(int(d), int(q), tuple(shifts.split(";")) if shifts else (),
                   _opt_int(brute), _opt_int(formula), parse_rational(pred), parse_rational(err))


def to_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(FIELDS)
    for r in reports:
        w.writerow(r.row())
    return buf.getvalue()


def from_csv(text: str) -> list[CountReport]:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or ",".join(rows[0]) != CSV_HEADER:
        raise ValueError("missing or unexpected CSV header")
    return [CountReport.from_row(r) for r in rows[1:]]


def to_json(reports) -> str:
    return json.dumps([r.as_dict() for r in reports], indent=2) + "\n"


def from_json(text: str) -> list[CountReport]:
    return [CountReport.from_dict(o) for o in json.loads(text)]


def to_markdown(reports) -> str:
    """d | prediction | q | pi | E, one row per report."""
    lines = ["| d | prediction | q | π | E |", "|---|---|---|---|---|"]
    for r in reports:
        count = r.formula_count if r.formula_count is not None else r.brute_count
        lines.append(f"| {r.d} | {fmt_decimal(r.prediction)} | {r.q} | "
                     f"{'-' if count is None else count} | {fmt_decimal(r.rel_error)} |")
    return "\n".join(lines) + "\n"


def emit(reports, fmt: str = "table") -> str:
    reports = list(reports)
    if fmt == "csv":
        return to_csv(reports)
    if fmt == "json":
        return to_json(reports)
    if fmt in ("table", "markdown"):
        return to_markdown(reports)
    raise ValueError(f"unknown format {fmt!r}")


def parse(text: str, fmt: str) -> list[CountReport]:
    if fmt == "csv":
        return from_csv(text)
    if fmt == "json":
        return from_json(text)
    raise ValueError(f"format {fmt!r} is not machine readable")


assert tuple(f.name for f in fields(CountReport)) == FIELDS

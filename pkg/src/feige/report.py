"""Verification reports, sawtooth sweeps and their serialized forms.

Reports serialize to JSON with a versioned ``schema`` field. Every exact
quantity is written as a "num/den" string; float columns in the sweep CSV
are convenience renderings only.
"""

from __future__ import annotations

import csv
import io
import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from .exact import format_rational, parse_rational
from .tail import IidTwoPointInstance, breakpoints, f_of_p, is_breakpoint

REPORT_SCHEMA = "feige.verification-report/1"
BATTERY_SCHEMA = "feige.verification-battery/1"
SWEEP_HEADER = ("p_num", "p_den", "p_float", "f_num", "f_den", "f_float", "is_breakpoint")

RELATIONS = {
    "ge": lambda a, b: a >= b,
    "gt": lambda a, b: a > b,
    "eq": lambda a, b: a == b,
    "le": lambda a, b: a <= b,
    "lt": lambda a, b: a < b,
}


@dataclass(frozen=True)
class LemmaWitness:
    """One exact comparison ``lhs <relation> rhs`` and whether it held."""

    lemma_id: str
    n: int | None
    m: int | None
    lhs: Fraction
    rhs: Fraction
    relation: str
    holds: bool

    @classmethod
    def compare(cls, lemma_id, lhs, rhs, relation="ge", *, n=None, m=None) -> LemmaWitness:
        lhs, rhs = Fraction(lhs), Fraction(rhs)
        return cls(lemma_id, n, m, lhs, rhs, relation, RELATIONS[relation](lhs, rhs))

    def to_dict(self) -> dict:
        return {
            "lemma_id": self.lemma_id,
            "n": self.n,
            "m": self.m,
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
            "relation": self.relation,
            "holds": self.holds,
        }

    @classmethod
    def from_dict(cls, d: dict) -> LemmaWitness:
        return cls(
            lemma_id=d["lemma_id"],
            n=d["n"],
            m=d["m"],
            lhs=parse_rational(d["lhs"]),
            rhs=parse_rational(d["rhs"]),
            relation=d["relation"],
            holds=d["holds"],
        )


@dataclass
class VerificationReport:
    suite: str
    checks_run: int = 0
    failures: list[LemmaWitness] = field(default_factory=list)
    parameters: dict[str, str] = field(default_factory=dict)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, witness: LemmaWitness) -> bool:
        self.checks_run += 1
        if not witness.holds:
            self.failures.append(witness)
        return witness.holds

    def to_dict(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "suite": self.suite,
            "checks_run": self.checks_run,
            "failures": [w.to_dict() for w in self.failures],
            "parameters": dict(sorted(self.parameters.items())),
            "elapsed_ms": self.elapsed_ms,
        }

    @classmethod
    def from_dict(cls, d: dict) -> VerificationReport:
        if d.get("schema") != REPORT_SCHEMA:
            raise ValueError(f"unsupported report schema {d.get('schema')!r}")
        return cls(
            suite=d["suite"],
            checks_run=d["checks_run"],
            failures=[LemmaWitness.from_dict(w) for w in d["failures"]],
            parameters=dict(d["parameters"]),
            elapsed_ms=d["elapsed_ms"],
        )


@contextmanager
def timed(report: VerificationReport) -> Iterator[VerificationReport]:
    start = time.perf_counter()
    try:
        yield report
    finally:
        report.elapsed_ms = int((time.perf_counter() - start) * 1000)


def serialize_report(r: VerificationReport) -> str:
    return json.dumps(r.to_dict(), indent=2) + "\n"


def parse_report(text: str) -> VerificationReport:
    return VerificationReport.from_dict(json.loads(text))


def serialize_battery(reports: Iterable[VerificationReport], parameters: dict[str, str] | None = None) -> str:
    reports = list(reports)
    doc = {
        "schema": BATTERY_SCHEMA,
        "parameters": dict(sorted((parameters or {}).items())),
        "passed": all(r.passed for r in reports),
        "total_checks": sum(r.checks_run for r in reports),
        "total_failures": sum(len(r.failures) for r in reports),
        "reports": [r.to_dict() for r in reports],
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_battery(text: str) -> list[VerificationReport]:
    doc = json.loads(text)
    if doc.get("schema") != BATTERY_SCHEMA:
        raise ValueError(f"unsupported battery schema {doc.get('schema')!r}")
    return [VerificationReport.from_dict(d) for d in doc["reports"]]


@dataclass(frozen=True)
class SweepRecord:
    p: Fraction
    f_value: Fraction
    p_float: float
    f_float: float
    is_breakpoint: bool

    def csv_row(self) -> list[str]:
        return [
            str(self.p.numerator),
            str(self.p.denominator),
            repr(self.p_float),
            str(self.f_value.numerator),
            str(self.f_value.denominator),
            repr(self.f_float),
            "true" if self.is_breakpoint else "false",
        ]


def sweep(n: int, points: int) -> list[SweepRecord]:
    """Evaluate f exactly on the grid j/(points+1) joined with every breakpoint."""
    if points < 2:
        raise ValueError(f"points must be >= 2, got {points}")
    grid = {Fraction(j, points + 1) for j in range(1, points + 1)}
    grid.update(breakpoints(n))
    records = []
    for p in sorted(grid):
        f = f_of_p(IidTwoPointInstance(n, p))
        records.append(SweepRecord(p, f, float(p), float(f), is_breakpoint(n, p)))
    return records


def sweep_to_csv(records: Iterable[SweepRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    for rec in records:
        writer.writerow(rec.csv_row())
    return buf.getvalue()


def write_sweep_csv(records: Iterable[SweepRecord], path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(sweep_to_csv(records))


def read_sweep_csv(text: str) -> list[SweepRecord]:
    rows = list(csv.reader(io.StringIO(text)))
    if tuple(rows[0]) != SWEEP_HEADER:
        raise ValueError(f"unexpected sweep header {rows[0]}")
    out = []
    for row in rows[1:]:
        p = Fraction(int(row[0]), int(row[1]))
        f = Fraction(int(row[3]), int(row[4]))
        out.append(SweepRecord(p, f, float(row[2]), float(row[5]), row[6] == "true"))
    return out

"""Bundled datasets for the published tables.

Each fixture keeps the printed cells verbatim (as strings, so transcription
oddities like a non-integer h survive for the reproduction diff) together
with a data-cleaning note where the printed row is internally inconsistent.
The cleaned ScholarRecord view applies the notes:

  est_h_transposed      printed estimate and h columns are swapped; h is the
                        integer printed under 'estimate'
  nonbook_exceeds_total printed non-book citations exceed the total; non-book
                        figures are dropped from analysis
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from importlib.resources import files
from typing import Optional

from .profiles import ScholarRecord

NOTE_TRANSPOSED = "est_h_transposed"
NOTE_NONBOOK_EXCEEDS = "nonbook_exceeds_total"

TARGET_TABLE1 = "table1"
TARGET_TABLE2 = "table2"
TARGET_TABLE3 = "table3"
TARGET_TABLE4 = "table4"
TARGET_APPENDIX = "appendix"
COHORT_TARGETS = (TARGET_TABLE2, TARGET_TABLE3, TARGET_TABLE4, TARGET_APPENDIX)
TARGETS = (TARGET_TABLE1,) + COHORT_TARGETS

_FILES = {
    TARGET_TABLE1: "table1_intervals.csv",
    TARGET_TABLE2: "fields_medalists.csv",
    TARGET_TABLE3: "abel_laureates.csv",
    TARGET_TABLE4: "associate_professors.csv",
    TARGET_APPENDIX: "nas_members.csv",
}


def _read_fixture(filename: str) -> list[dict[str, str]]:
    text = files("durfee").joinpath("data", filename).read_text(encoding="utf-8")
    rows = [line for line in text.splitlines() if line.strip() and not line.startswith("#")]
    return list(csv.DictReader(rows))


@dataclass(frozen=True)
class PaperRow:
    """One published row: printed cells verbatim plus the cleaned reading."""

    name: str
    citations: int
    printed_estimate: str
    printed_h: str
    printed_low: Optional[int] = None
    printed_high: Optional[int] = None
    citations_nonbook: Optional[int] = None
    printed_estimate_nonbook: Optional[str] = None
    printed_h_nonbook: Optional[str] = None
    award_year: Optional[int] = None
    note: str = ""

    @property
    def h(self) -> int:
        if self.note == NOTE_TRANSPOSED:
            return int(self.printed_estimate)
        return int(self.printed_h)

    @property
    def record(self) -> ScholarRecord:
        if self.citations_nonbook is None or self.note == NOTE_NONBOOK_EXCEEDS:
            nonbook = h_nonbook = None
        elif self.note == NOTE_TRANSPOSED:
            nonbook = self.citations_nonbook
            h_nonbook = int(self.printed_estimate_nonbook)
        else:
            nonbook = self.citations_nonbook
            h_nonbook = int(self.printed_h_nonbook)
        return ScholarRecord(
            name=self.name,
            citations=self.citations,
            h=self.h,
            citations_nonbook=nonbook,
            h_nonbook=h_nonbook,
        )


def load_table1() -> list[tuple[int, int, int]]:
    """(n, printed_low, printed_high) for the 26 published interval entries."""
    return [
        (int(r["n"]), int(r["low"]), int(r["high"]))
        for r in _read_fixture(_FILES[TARGET_TABLE1])
    ]


def load_rows(target: str) -> list[PaperRow]:
    """PaperRow list for table2, table3, table4 or appendix."""
    if target not in COHORT_TARGETS:
        raise KeyError(f"unknown cohort target {target!r}, expected one of {COHORT_TARGETS}")
    rows = []
    for r in _read_fixture(_FILES[target]):
        if target == TARGET_APPENDIX:
            rows.append(
                PaperRow(
                    name=r["name"],
                    citations=int(r["citations"]),
                    printed_estimate=r["printed_estimate"],
                    printed_h=r["printed_h"],
                    citations_nonbook=int(r["citations_nonbook"]),
                    printed_estimate_nonbook=r["printed_estimate_nonbook"],
                    printed_h_nonbook=r["printed_h_nonbook"],
                    note=r["note"],
                )
            )
        else:
            rows.append(
                PaperRow(
                    name=r["name"],
                    citations=int(r["citations"]),
                    printed_estimate=r["printed_estimate"],
                    printed_h=r["h"],
                    printed_low=int(r["printed_low"]),
                    printed_high=int(r["printed_high"]),
                    award_year=int(r["award_year"]) if r.get("award_year") else None,
                )
            )
    return rows


def cohort_records(target: str) -> list[ScholarRecord]:
    """Cleaned ScholarRecords for a bundled cohort."""
    return [row.record for row in load_rows(target)]


def load_worked_examples() -> list[dict[str, str]]:
    """Point-in-time single-scholar examples (sources move; figures are frozen)."""
    return _read_fixture("worked_examples.csv")

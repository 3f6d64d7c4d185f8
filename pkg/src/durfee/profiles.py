"""Citation-profile and cohort analytics.

A citation profile is a partition (citations per paper, weakly decreasing);
its h-index is the side of the largest square fitting in the Young diagram.
Scholars carry aggregate figures and are assessed against the uniform-model
estimate and confidence interval; cohorts get Pearson correlations of
estimated versus actual h.
"""

from __future__ import annotations

import csv
import math
import statistics
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import CohortParseError, DegenerateDataError
from .intervals import (
    ConfidenceInterval,
    DEFAULT_EPSILON,
    RULE_SYMMETRIC,
    confidence_interval,
    rule_of_thumb,
)

ANOMALY_NONE = "none"
ANOMALY_BELOW = "below_interval"
ANOMALY_ABOVE = "above_interval"


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing citations per paper; trailing zeros permitted."""

    parts: tuple[int, ...]

    def __post_init__(self):
        for i, part in enumerate(self.parts):
            if part < 0:
                raise ValueError(f"parts must be nonnegative, got {part}")
            if i and part > self.parts[i - 1]:
                raise ValueError(f"parts must be weakly decreasing: {self.parts}")

    @classmethod
    def from_citations(cls, citations) -> "Partition":
        """Build from per-paper citation counts in any order."""
        return cls(tuple(sorted((int(c) for c in citations), reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def n_papers(self) -> int:
        return len(self.parts)


EMPTY_PARTITION = Partition(())


def h_index(profile: Partition) -> int:
    """Largest k such that the k-th largest entry is >= k (Durfee-square side)."""
    h = 0
    for i, part in enumerate(profile.parts):
        if part >= i + 1:
            h = i + 1
        else:
            break
    return h


@dataclass(frozen=True)
class DurfeeDecomposition:
    """Square side k, the shape right of the square (<= k rows, canonical) and
    the shape below it (parts <= k, rows kept verbatim so recomposition is exact)."""

    k: int
    right: Partition
    below: Partition


def durfee_decompose(profile: Partition) -> DurfeeDecomposition:
    k = h_index(profile)
    right = tuple(profile.parts[i] - k for i in range(k))
    while right and right[-1] == 0:
        right = right[:-1]
    below = profile.parts[k:]
    return DurfeeDecomposition(k, Partition(right), Partition(below))


def recompose(decomposition: DurfeeDecomposition) -> Partition:
    """Inverse of durfee_decompose."""
    k = decomposition.k
    right = decomposition.right.parts
    rows = tuple(k + (right[i] if i < len(right) else 0) for i in range(k))
    return Partition(rows + decomposition.below.parts)


@dataclass(frozen=True)
class ScholarRecord:
    name: str
    citations: int
    h: int
    citations_nonbook: Optional[int] = None
    h_nonbook: Optional[int] = None
    full_profile: Optional[Partition] = None
    adjusted_from: Optional["ScholarRecord"] = None

    def __post_init__(self):
        if self.citations < 0 or self.h < 0:
            raise ValueError(f"{self.name}: citations and h must be nonnegative")
        if self.h > math.isqrt(self.citations):
            raise ValueError(
                f"{self.name}: h={self.h} exceeds isqrt({self.citations})={math.isqrt(self.citations)}"
            )
        if self.citations_nonbook is not None:
            if self.citations_nonbook > self.citations:
                raise ValueError(
                    f"{self.name}: non-book citations {self.citations_nonbook} "
                    f"exceed total {self.citations}"
                )
            hnb = self.h_nonbook if self.h_nonbook is not None else self.h
            if hnb > math.isqrt(self.citations_nonbook):
                raise ValueError(f"{self.name}: non-book h={hnb} exceeds its bound")
        elif self.h_nonbook is not None:
            raise ValueError(f"{self.name}: h_nonbook given without citations_nonbook")
        if self.full_profile is not None:
            if self.full_profile.size != self.citations:
                raise ValueError(f"{self.name}: profile size != citations")
            if h_index(self.full_profile) != self.h:
                raise ValueError(f"{self.name}: profile h-index != h")


def hirsch_a(citations: int, h: int) -> float:
    """Proportionality constant in citations = a * h^2 (empirically 3-5)."""
    if h < 1:
        raise ValueError(f"h must be positive, got {h}")
    return citations / (h * h)


@dataclass(frozen=True)
class Assessment:
    scholar: ScholarRecord
    estimate: float
    interval: ConfidenceInterval
    in_interval: bool
    ratio: Optional[float]
    hirsch_a: Optional[float]
    anomaly: str
    revised: Optional["Assessment"] = None

    @property
    def distance(self) -> int:
        """Units outside the interval (0 when inside)."""
        if self.scholar.h < self.interval.low:
            return self.interval.low - self.scholar.h
        if self.scholar.h > self.interval.high:
            return self.scholar.h - self.interval.high
        return 0


def book_adjust(scholar: ScholarRecord) -> ScholarRecord:
    """Record whose primary figures are the non-book ones; original kept on adjusted_from."""
    if scholar.citations_nonbook is None:
        raise ValueError(f"{scholar.name}: no non-book figures to adjust with")
    return ScholarRecord(
        name=scholar.name,
        citations=scholar.citations_nonbook,
        h=scholar.h_nonbook if scholar.h_nonbook is not None else scholar.h,
        adjusted_from=scholar,
    )


def assess(
    scholar: ScholarRecord,
    epsilon=DEFAULT_EPSILON,
    *,
    rule: str = RULE_SYMMETRIC,
) -> Assessment:
    """Estimate, interval, membership, h/estimate ratio, Hirsch a and anomaly flag.

    When non-book figures are present a paired revised assessment is attached.
    """
    estimate = rule_of_thumb(scholar.citations).value
    interval = confidence_interval(scholar.citations, epsilon, rule=rule)
    in_interval = interval.low <= scholar.h <= interval.high
    if in_interval:
        anomaly = ANOMALY_NONE
    elif scholar.h < interval.low:
        anomaly = ANOMALY_BELOW
    else:
        anomaly = ANOMALY_ABOVE
    revised = None
    if scholar.citations_nonbook is not None:
        revised = assess(book_adjust(scholar), epsilon, rule=rule)
    return Assessment(
        scholar=scholar,
        estimate=estimate,
        interval=interval,
        in_interval=in_interval,
        ratio=scholar.h / estimate if estimate > 0 else None,
        hirsch_a=hirsch_a(scholar.citations, scholar.h) if scholar.h > 0 else None,
        anomaly=anomaly,
        revised=revised,
    )


def pearson_r(points: Sequence[tuple[float, float]]) -> float:
    """Product-moment correlation of (x, y) pairs."""
    if len(points) < 2:
        raise DegenerateDataError(f"need at least 2 points, got {len(points)}")
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    try:
        return statistics.correlation(xs, ys)
    except statistics.StatisticsError as exc:
        raise DegenerateDataError(str(exc)) from exc


@dataclass
class CohortReport:
    assessments: list[Assessment]
    pearson_r: Optional[float]
    pearson_error: Optional[str]
    scatter_points: list[tuple[float, int]]
    pearson_r_nonbook: Optional[float] = None
    pearson_nonbook_error: Optional[str] = None
    scatter_points_nonbook: list[tuple[float, int]] = field(default_factory=list)

    @property
    def out_of_interval(self) -> list[Assessment]:
        return [a for a in self.assessments if not a.in_interval]


def analyze_cohort(
    records: Sequence[ScholarRecord],
    epsilon=DEFAULT_EPSILON,
    *,
    rule: str = RULE_SYMMETRIC,
) -> CohortReport:
    """Per-record assessments plus cohort correlations (raw, and non-book when present).

    A degenerate correlation is recorded on the report rather than raised.
    """
    if not records:
        raise ValueError("cohort must contain at least one record")
    assessments = [assess(s, epsilon, rule=rule) for s in records]
    scatter = [(a.estimate, a.scholar.h) for a in assessments]
    r = err = None
    try:
        r = pearson_r(scatter)
    except DegenerateDataError as exc:
        err = str(exc)
    scatter_nb = [
        (a.revised.estimate, a.revised.scholar.h)
        for a in assessments
        if a.revised is not None
    ]
    r_nb = err_nb = None
    if scatter_nb:
        try:
            r_nb = pearson_r(scatter_nb)
        except DegenerateDataError as exc:
            err_nb = str(exc)
    return CohortReport(
        assessments=assessments,
        pearson_r=r,
        pearson_error=err,
        scatter_points=scatter,
        pearson_r_nonbook=r_nb,
        pearson_nonbook_error=err_nb,
        scatter_points_nonbook=scatter_nb,
    )


# ---------------------------------------------------------------------------
# file formats
# ---------------------------------------------------------------------------

COHORT_COLUMNS = ("name", "citations", "h", "citations_nonbook", "h_nonbook")


def _data_lines(text: str):
    """(line_number, line) pairs with blanks and # comments skipped."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_cohort_csv(text: str) -> list[ScholarRecord]:
    """Cohort CSV: header with name,citations,h,citations_nonbook,h_nonbook;
    empty fields for missing optionals.  Extra columns are ignored."""
    lines = list(_data_lines(text))
    if not lines:
        raise CohortParseError(0, "empty cohort file")
    header_no, header_line = lines[0]
    header = next(csv.reader([header_line]))
    columns = [c.strip() for c in header]
    missing = [c for c in COHORT_COLUMNS if c not in columns]
    if missing:
        raise CohortParseError(header_no, f"missing required columns {missing}")
    idx = {c: columns.index(c) for c in COHORT_COLUMNS}

    records = []
    for lineno, line in lines[1:]:
        cells = next(csv.reader([line]))
        if len(cells) < len(columns):
            cells += [""] * (len(columns) - len(cells))

        def cell(col):
            return cells[idx[col]].strip()

        def int_cell(col, required):
            value = cell(col)
            if not value:
                if required:
                    raise CohortParseError(lineno, f"missing value for {col!r}")
                return None
            try:
                return int(value)
            except ValueError:
                raise CohortParseError(lineno, f"{col!r} must be an integer, got {value!r}")

        try:
            record = ScholarRecord(
                name=cell("name"),
                citations=int_cell("citations", required=True),
                h=int_cell("h", required=True),
                citations_nonbook=int_cell("citations_nonbook", required=False),
                h_nonbook=int_cell("h_nonbook", required=False),
            )
        except ValueError as exc:
            if isinstance(exc, CohortParseError):
                raise
            raise CohortParseError(lineno, str(exc)) from exc
        records.append(record)
    if not records:
        raise CohortParseError(header_no, "cohort file has a header but no rows")
    return records


def parse_profile_file(text: str) -> list[tuple[str, Partition]]:
    """Profile lines 'name: c1 c2 c3 ...'; citation counts in any order."""
    profiles = []
    for lineno, line in _data_lines(text):
        name, sep, rest = line.partition(":")
        if not sep:
            raise CohortParseError(lineno, "expected 'name: c1 c2 ...'")
        try:
            counts = [int(tok) for tok in rest.split()]
        except ValueError:
            raise CohortParseError(lineno, f"non-integer citation count in {rest!r}")
        if any(c < 0 for c in counts):
            raise CohortParseError(lineno, "citation counts must be nonnegative")
        profiles.append((name.strip(), Partition.from_citations(counts)))
    if not profiles:
        raise CohortParseError(0, "no profiles found")
    return profiles

"""Regenerate the published tables from the engine and diff cell by cell.

Estimate cells are compared at the printed precision (one decimal, tolerance
0.1).  Rows whose printed cells are mutually inconsistent -- an estimate that
does not follow from the row's own citation count, swapped columns, non-book
totals exceeding the overall total -- are detected mechanically and reported
instead of being scored as mismatches.
"""

from __future__ import annotations

from . import datasets
from .intervals import (
    RULE_MINWIDTH,
    RULE_SYMMETRIC,
    confidence_interval,
    rule_of_thumb,
)
from .profiles import analyze_cohort

ESTIMATE_TOL = 0.1
_FUZZ = 1e-9

ISSUE_TRANSPOSED = "printed_estimate_and_h_transposed"
ISSUE_ESTIMATE = "printed_estimate_inconsistent_with_citations"
ISSUE_NONBOOK_ESTIMATE = "printed_nonbook_estimate_inconsistent_with_nonbook_citations"
ISSUE_NONBOOK_TOTAL = "printed_nonbook_citations_exceed_total"


def _is_integral(cell: str) -> bool:
    try:
        int(cell)
        return True
    except ValueError:
        return False


def _estimate_matches(citations: int, printed: str) -> tuple[float, bool]:
    computed = round(rule_of_thumb(citations).value, 1)
    return computed, abs(computed - float(printed)) <= ESTIMATE_TOL + _FUZZ


def detect_issues(row: datasets.PaperRow) -> list[str]:
    """Mechanical internal-consistency check of one published row."""
    issues = []
    est, est_ok = _estimate_matches(row.citations, row.printed_estimate)
    if not _is_integral(row.printed_h) and _is_integral(row.printed_estimate):
        # the h column holds the one-decimal estimate and vice versa
        if abs(float(row.printed_h) - est) <= ESTIMATE_TOL + _FUZZ:
            return [ISSUE_TRANSPOSED]
    if not est_ok:
        issues.append(ISSUE_ESTIMATE)
    if row.citations_nonbook is not None:
        if row.citations_nonbook > row.citations:
            issues.append(ISSUE_NONBOOK_TOTAL)
        elif row.printed_estimate_nonbook is not None:
            _, nb_ok = _estimate_matches(row.citations_nonbook, row.printed_estimate_nonbook)
            if not nb_ok:
                issues.append(ISSUE_NONBOOK_ESTIMATE)
    return issues


def _interval_cells(n: int, printed_low: int, printed_high: int) -> dict:
    sym = confidence_interval(n, rule=RULE_SYMMETRIC)
    mw = confidence_interval(n, rule=RULE_MINWIDTH)
    best = min(
        (max(abs(iv.low - printed_low), abs(iv.high - printed_high)) for iv in (sym, mw))
    )
    return {
        "printed": [printed_low, printed_high],
        "symmetric": [sym.low, sym.high],
        "symmetric_mass": sym.mass,
        "minwidth": [mw.low, mw.high],
        "minwidth_mass": mw.mass,
        "max_endpoint_error": best,
        "within_one": best <= 1,
        "exact_symmetric": (sym.low, sym.high) == (printed_low, printed_high),
        "exact_minwidth": (mw.low, mw.high) == (printed_low, printed_high),
    }


def reproduce_table1() -> dict:
    rows = []
    for n, low, high in datasets.load_table1():
        cells = _interval_cells(n, low, high)
        cells["n"] = n
        rows.append(cells)
    return {
        "target": datasets.TARGET_TABLE1,
        "rows": rows,
        "summary": {
            "rows": len(rows),
            "within_one": sum(r["within_one"] for r in rows),
            "exact_symmetric": sum(r["exact_symmetric"] for r in rows),
            "exact_minwidth": sum(r["exact_minwidth"] for r in rows),
            "min_mass": min(min(r["symmetric_mass"], r["minwidth_mass"]) for r in rows),
        },
    }


def _reproduce_cohort(target: str) -> dict:
    paper_rows = datasets.load_rows(target)
    rows = []
    inconsistent = []
    for row in paper_rows:
        issues = detect_issues(row)
        computed, est_ok = _estimate_matches(row.citations, row.printed_estimate)
        cells = {
            "name": row.name,
            "citations": row.citations,
            "h": row.h,
            "printed_estimate": row.printed_estimate,
            "computed_estimate": computed,
            "estimate_match": est_ok,
            "issues": issues,
        }
        if row.printed_low is not None:
            cells["interval"] = _interval_cells(row.citations, row.printed_low, row.printed_high)
            cells["outside_printed_by"] = max(
                row.printed_low - row.h, row.h - row.printed_high, 0
            )
        if row.citations_nonbook is not None and ISSUE_NONBOOK_TOTAL not in issues:
            nb_computed, nb_ok = _estimate_matches(
                row.citations_nonbook, row.printed_estimate_nonbook
            )
            cells["citations_nonbook"] = row.citations_nonbook
            cells["printed_estimate_nonbook"] = row.printed_estimate_nonbook
            cells["computed_estimate_nonbook"] = nb_computed
            cells["estimate_nonbook_match"] = nb_ok
        if issues:
            inconsistent.append({"name": row.name, "issues": issues})
        rows.append(cells)

    clean = [r for r in rows if not r["issues"]]
    summary = {
        "rows": len(rows),
        "inconsistent_rows": inconsistent,
        "estimate_matches_excluding_flagged": sum(r["estimate_match"] for r in clean),
        "clean_rows": len(clean),
        "estimate_mismatches_unflagged": [
            r["name"] for r in clean
            if not (r["estimate_match"] and r.get("estimate_nonbook_match", True))
        ],
    }
    if any("interval" in r for r in rows):
        outside = [
            {"name": r["name"], "by": r["outside_printed_by"]}
            for r in rows
            if r.get("outside_printed_by", 0) > 0
        ]
        summary["outside_printed_interval"] = outside
        summary["intervals_within_one"] = sum(r["interval"]["within_one"] for r in rows)

    report = analyze_cohort([row.record for row in paper_rows])
    summary["pearson_r"] = report.pearson_r
    if report.pearson_r_nonbook is not None:
        summary["pearson_r_nonbook"] = report.pearson_r_nonbook
    return {"target": target, "rows": rows, "summary": summary}


def reproduce(target: str) -> dict:
    """Cell-by-cell reproduction report for one published table."""
    if target == datasets.TARGET_TABLE1:
        return reproduce_table1()
    if target in datasets.COHORT_TARGETS:
        return _reproduce_cohort(target)
    raise KeyError(f"unknown target {target!r}, expected one of {datasets.TARGETS}")

"""Exact integer-partition counting.

Everything here is exact big-integer arithmetic: the unrestricted partition
numbers p(n) via Euler's pentagonal-number recurrence, counts of partitions
with bounded part size, and counts of partitions by Durfee-square size.
Probabilities are never formed at this layer.
"""

from __future__ import annotations

import math
import os
import threading
from dataclasses import dataclass

import mpmath

from .errors import ResourceLimitError

DEFAULT_MAX_N = 100_000

CACHE_DIR_ENV = "DURFEE_CACHE_DIR"
_CACHE_FILE = "partition_counts.txt"

_lock = threading.RLock()


@dataclass(frozen=True)
class PartitionCountTable:
    """values[m] = p(m), exact, for 0 <= m <= max_n."""

    max_n: int
    values: tuple[int, ...]


@dataclass(frozen=True)
class BoundedPartTable:
    """values[m] = number of partitions of m into parts of size <= k."""

    k: int
    max_m: int
    values: tuple[int, ...]


@dataclass(frozen=True)
class DurfeeCountRow:
    """counts[k] = number of partitions of n with Durfee square exactly k, k = 0..isqrt(n)."""

    n: int
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)


def _check_cap(n: int, cap: int) -> None:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > cap:
        raise ResourceLimitError(n, cap)


# ---------------------------------------------------------------------------
# p(n) via the pentagonal-number recurrence
# ---------------------------------------------------------------------------

_pcounts: list[int] = [1]
_cache_loaded = False


def _cache_path() -> str | None:
    root = os.environ.get(CACHE_DIR_ENV)
    if not root:
        return None
    return os.path.join(root, _CACHE_FILE)


def _load_persisted() -> None:
    global _cache_loaded
    _cache_loaded = True
    path = _cache_path()
    if path is None or not os.path.exists(path):
        return
    with open(path, "r", encoding="ascii") as fh:
        header = fh.readline().strip()
        if not header.startswith("n="):
            raise ValueError(f"{path}: expected header 'n=<max>', got {header!r}")
        max_n = int(header[2:])
        values = [int(line) for line in fh if line.strip()]
    if len(values) != max_n + 1 or values[0] != 1:
        raise ValueError(f"{path}: header says {max_n + 1} values, found {len(values)}")
    if len(values) > len(_pcounts):
        _pcounts[:] = values


def _persist() -> None:
    path = _cache_path()
    if path is None:
        return
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="ascii") as fh:
        fh.write(f"n={len(_pcounts) - 1}\n")
        fh.writelines(f"{v}\n" for v in _pcounts)
    os.replace(tmp, path)


def _extend_pcounts(max_n: int) -> None:
    if not _cache_loaded:
        _load_persisted()
    if max_n < len(_pcounts):
        return
    p = _pcounts
    for n in range(len(p), max_n + 1):
        total = 0
        k = 1
        while True:
            g = k * (3 * k - 1) // 2
            if g > n:
                break
            sign = -1 if k % 2 == 0 else 1
            total += sign * p[n - g]
            g += k  # k*(3k+1)/2
            if g <= n:
                total += sign * p[n - g]
            k += 1
        p.append(total)
    _persist()


def partition_count(n: int, *, cap: int = DEFAULT_MAX_N) -> int:
    """Exact number of partitions of n."""
    _check_cap(n, cap)
    with _lock:
        _extend_pcounts(n)
        return _pcounts[n]


def partition_count_table(max_n: int, *, cap: int = DEFAULT_MAX_N) -> PartitionCountTable:
    """Table of p(0), ..., p(max_n)."""
    _check_cap(max_n, cap)
    with _lock:
        _extend_pcounts(max_n)
        return PartitionCountTable(max_n, tuple(_pcounts[: max_n + 1]))


# ---------------------------------------------------------------------------
# partitions with bounded part size
# ---------------------------------------------------------------------------

_bounded_rows: dict[int, list[int]] = {}


def _bounded_row(k: int, max_m: int) -> list[int]:
    row = _bounded_rows.get(k)
    if row is not None and len(row) > max_m:
        return row
    row = [1] + [0] * max_m
    for j in range(1, k + 1):
        for m in range(j, max_m + 1):
            row[m] += row[m - j]
    _bounded_rows[k] = row
    return row


def bounded_part_counts(k: int, max_m: int, *, cap: int = DEFAULT_MAX_N) -> BoundedPartTable:
    """Counts of partitions of m into parts <= k, for 0 <= m <= max_m.

    By conjugation the same table counts partitions of m with at most k parts.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    _check_cap(max_m, cap)
    _check_cap(k, cap)
    with _lock:
        row = _bounded_row(k, max_m)
        return BoundedPartTable(k, max_m, tuple(row[: max_m + 1]))


# ---------------------------------------------------------------------------
# counts by Durfee-square size
# ---------------------------------------------------------------------------
#
# A partition with Durfee square k splits into the square, a shape with at
# most k rows on its right and a shape with parts <= k below it, so the count
# for size n is the coefficient of x^(n - k^2) in the square of the bounded
# series for parts <= k.  Multiplying a coefficient array by 1/(1-x^k) is one
# in-place stride-k prefix pass, so the square for successive k is maintained
# with two passes per k; a snapshot per k makes every n up to the built length
# answerable without recomputation.

_durfee_built = -1
_durfee_rows: list[list[int]] = []


def _ensure_durfee_rows(n: int) -> None:
    global _durfee_built, _durfee_rows
    if n <= _durfee_built:
        return
    target = max(n, min(2 * max(_durfee_built, 0), DEFAULT_MAX_N))
    acc = [0] * (target + 1)
    acc[0] = 1
    rows = [acc.copy()]
    for k in range(1, math.isqrt(target) + 1):
        for _ in range(2):
            for m in range(k, target + 1):
                acc[m] += acc[m - k]
        # coefficients above target - k^2 can never be read for this k
        rows.append(acc[: target - k * k + 1])
    _durfee_rows = rows
    _durfee_built = target


def durfee_counts(n: int, *, cap: int = DEFAULT_MAX_N) -> DurfeeCountRow:
    """Counts of partitions of n by exact Durfee-square size k = 0..isqrt(n)."""
    _check_cap(n, cap)
    with _lock:
        _ensure_durfee_rows(n)
        counts = tuple(_durfee_rows[k][n - k * k] for k in range(math.isqrt(n) + 1))
        return DurfeeCountRow(n, counts)


# ---------------------------------------------------------------------------
# Hardy-Ramanujan approximation
# ---------------------------------------------------------------------------


def hardy_ramanujan_estimate(n: int) -> mpmath.mpf:
    """First-order approximation exp(pi*sqrt(2n/3)) / (4n*sqrt(3)).

    Evaluated at 30 decimal digits; float64 would lose digits in the exponent
    for large n and overflows entirely past n ~ 7e4.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    with mpmath.workdps(30):
        x = mpmath.mpf(n)
        return mpmath.exp(mpmath.pi * mpmath.sqrt(2 * x / 3)) / (4 * x * mpmath.sqrt(3))


def clear_caches() -> None:
    """Drop all memoized tables (test isolation for cache-dir persistence)."""
    global _durfee_built, _durfee_rows, _cache_loaded
    with _lock:
        _pcounts[:] = [1]
        _bounded_rows.clear()
        _durfee_rows = []
        _durfee_built = -1
        _cache_loaded = False

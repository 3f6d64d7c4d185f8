"""Shared brute-force oracles, independent of the package's counting paths."""

from functools import lru_cache


def iter_partitions(n, max_part=None):
    """All weakly decreasing positive-integer tuples summing to n."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in iter_partitions(n - first, first):
            yield (first,) + rest


def durfee_side(parts):
    """Largest k such that a k-by-k square fits in the Young diagram."""
    k = 0
    while k < len(parts) and all(parts[i] >= k + 1 for i in range(k + 1)):
        k += 1
    return k


@lru_cache(maxsize=None)
def bounded_count(m, k):
    """Partitions of m into parts <= k, by the textbook recurrence."""
    if m == 0:
        return 1
    if m < 0 or k == 0:
        return 0
    return bounded_count(m, k - 1) + bounded_count(m - k, k)

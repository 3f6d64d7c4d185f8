"""Uniform random partition generation.

Two methods: recursive unranking against exact bounded-part count tables
(uniform by construction, preferred up to a few thousand) and Boltzmann
rejection with independent geometric part multiplicities (uniform conditional
on acceptance, scales further).  Both are seed-deterministic; the RNG
algorithm is recorded in results for reproducibility.
"""

from __future__ import annotations

import math
import random
from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import ResourceLimitError
from .intervals import DurfeeDistribution
from .profiles import Partition, h_index

METHOD_UNRANKING = "recursive_unranking"
METHOD_BOLTZMANN = "boltzmann_rejection"
METHODS = (METHOD_UNRANKING, METHOD_BOLTZMANN)

# unranking holds O(n^2/2) exact integers; past this size use boltzmann_rejection
UNRANKING_MAX_N = 5000

_BOLTZMANN_BATCH = 512


@dataclass(frozen=True)
class SamplerConfig:
    n: int
    seed: int = 0
    method: str = METHOD_UNRANKING

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}, expected one of {METHODS}")
        if self.method == METHOD_UNRANKING and self.n > UNRANKING_MAX_N:
            raise ResourceLimitError(self.n, UNRANKING_MAX_N)


@dataclass
class EmpiricalDistribution:
    n: int
    samples: int
    histogram: dict[int, int]
    method: str
    seed: int
    rng: str

    @property
    def frequencies(self) -> dict[int, float]:
        return {k: c / self.samples for k, c in self.histogram.items()}


class _UnrankingSampler:
    """Largest-part-first unranking: with m left and parts bounded by b, the
    largest part j is chosen with probability (partitions of m-j with parts
    <= j) / (partitions of m with parts <= b), all weights exact integers."""

    rng_name = "mt19937"

    def __init__(self, n: int, seed: int):
        self.n = n
        self._rng = random.Random(seed)
        # bounded[j][r] = partitions of r into parts <= j, r <= n - j
        bounded = [[1] + [0] * n]
        for j in range(1, n + 1):
            prev = bounded[j - 1]
            row = prev[: n - j + 1].copy()
            for r in range(j, n - j + 1):
                row[r] += row[r - j]
            bounded.append(row)
        # cum[m][i] = sum over largest part j <= i+1 of bounded[j][m - j]
        self._cum = [[]]
        for m in range(1, n + 1):
            acc = 0
            row = []
            for j in range(1, m + 1):
                acc += bounded[j][m - j]
                row.append(acc)
            self._cum.append(row)

    def sample(self) -> tuple[int, ...]:
        parts = []
        m, bound = self.n, self.n
        while m:
            jmax = min(m, bound)
            row = self._cum[m]
            r = self._rng.randrange(row[jmax - 1])
            part = bisect_right(row, r, 0, jmax) + 1
            parts.append(part)
            m -= part
            bound = part
        return tuple(parts)


class _BoltzmannSampler:
    """Independent geometric multiplicities for each part size at the tuning
    point x = exp(-pi/sqrt(6n)), rejected until the total is exactly n."""

    rng_name = "pcg64"

    def __init__(self, n: int, seed: int):
        self.n = n
        self._rng = np.random.default_rng(seed)
        x = math.exp(-math.pi / math.sqrt(6 * n))
        self._p = 1.0 - x ** np.arange(1, n + 1, dtype=float)
        self._sizes = np.arange(1, n + 1)
        self._queue: list[tuple[int, ...]] = []

    def sample(self) -> tuple[int, ...]:
        while not self._queue:
            mult = self._rng.geometric(self._p, size=(_BOLTZMANN_BATCH, self.n)) - 1
            totals = mult @ self._sizes
            for i in np.flatnonzero(totals == self.n):
                parts = np.repeat(self._sizes, mult[i])[::-1]
                self._queue.append(tuple(int(p) for p in parts))
        return self._queue.pop(0)


def make_sampler(config: SamplerConfig):
    if config.method == METHOD_UNRANKING:
        return _UnrankingSampler(config.n, config.seed)
    return _BoltzmannSampler(config.n, config.seed)


def sample_partition(config: SamplerConfig) -> Partition:
    """First draw of the stream defined by config."""
    return Partition(make_sampler(config).sample())


def empirical_durfee_distribution(config: SamplerConfig, samples: int) -> EmpiricalDistribution:
    """Histogram of the h-index over seeded independent draws."""
    if samples < 1:
        raise ValueError(f"samples must be positive, got {samples}")
    sampler = make_sampler(config)
    histogram = Counter()
    for _ in range(samples):
        histogram[h_index(Partition(sampler.sample()))] += 1
    return EmpiricalDistribution(
        n=config.n,
        samples=samples,
        histogram=dict(sorted(histogram.items())),
        method=config.method,
        seed=config.seed,
        rng=sampler.rng_name,
    )


def total_variation(empirical: EmpiricalDistribution, exact: DurfeeDistribution) -> float:
    """Half the L1 distance between the empirical frequencies and the exact law."""
    freqs = empirical.frequencies
    keys = set(freqs) | set(range(len(exact.probabilities)))
    return 0.5 * sum(
        abs(freqs.get(k, 0.0) - (exact.probabilities[k] if k < len(exact.probabilities) else 0.0))
        for k in keys
    )

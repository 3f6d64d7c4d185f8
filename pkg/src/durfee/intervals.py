"""Distribution of the h-index of a uniform random partition of n, and
the derived quantities: confidence intervals, tail probabilities, mode,
rule-of-thumb estimate and concentration mass.

Interval selection and tail sums are carried out on exact integer counts
(epsilon is taken as an exact fraction of its decimal spelling); floats
appear only in reported values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import partitions
from .partitions import DEFAULT_MAX_N, DurfeeCountRow

RULE_SYMMETRIC = "symmetric"
RULE_MINWIDTH = "minwidth"
RULES = (RULE_SYMMETRIC, RULE_MINWIDTH)

# mode constant of the Durfee-square size: sqrt(6)*ln(2)/pi ~ 0.5404
RULE_OF_THUMB_CONSTANT = math.sqrt(6) * math.log(2) / math.pi

DEFAULT_EPSILON = 0.02


@dataclass(frozen=True)
class DurfeeDistribution:
    """Exact counts plus correctly rounded float probabilities over k = 0..isqrt(n)."""

    n: int
    counts: DurfeeCountRow
    probabilities: tuple[float, ...]

    @property
    def total(self) -> int:
        return self.counts.total

    def probability_exact(self, k: int) -> Fraction:
        if not 0 <= k < len(self.counts.counts):
            return Fraction(0)
        return Fraction(self.counts.counts[k], self.total)


@dataclass(frozen=True)
class ConfidenceInterval:
    n: int
    epsilon: float
    low: int
    high: int
    mass: float
    rule: str = RULE_SYMMETRIC

    @property
    def width(self) -> int:
        return self.high - self.low


@dataclass(frozen=True)
class RuleOfThumbEstimate:
    n: int
    value: float

    @property
    def display(self) -> float:
        """Rounded to one decimal, the precision used in reports."""
        return round(self.value, 1)


def max_h(n: int) -> int:
    """Largest possible h-index for n citations: isqrt(n)."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return math.isqrt(n)


def rule_of_thumb(n: int) -> RuleOfThumbEstimate:
    """Asymptotic mode of the h-index: sqrt(6)*ln(2)/pi * sqrt(n) ~ 0.54*sqrt(n)."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return RuleOfThumbEstimate(n, RULE_OF_THUMB_CONSTANT * math.sqrt(n))


def durfee_distribution(n: int, *, cap: int = DEFAULT_MAX_N) -> DurfeeDistribution:
    """Probability that a uniform random partition of n has h-index k, for each k."""
    row = partitions.durfee_counts(n, cap=cap)
    total = row.total
    probs = tuple(float(Fraction(c, total)) for c in row.counts)
    return DurfeeDistribution(n, row, probs)


def _epsilon_fraction(epsilon) -> Fraction:
    # fractions parse the decimal spelling, so 0.02 means exactly 1/50
    eps = Fraction(str(epsilon)) if isinstance(epsilon, float) else Fraction(epsilon)
    if not 0 < eps < 1:
        raise ValueError(f"epsilon must be in (0, 1), got {epsilon}")
    return eps


def confidence_interval(
    n: int,
    epsilon=DEFAULT_EPSILON,
    *,
    rule: str = RULE_SYMMETRIC,
    cap: int = DEFAULT_MAX_N,
) -> ConfidenceInterval:
    """Integer interval [low, high] covering h with probability >= 1 - epsilon.

    symmetric: low is the largest a with P(h < a) <= eps/2, high the smallest
    b with P(h > b) <= eps/2.  minwidth: the narrowest interval with mass
    >= 1 - eps (ties: larger mass, then smaller low endpoint).
    """
    eps = _epsilon_fraction(epsilon)
    if rule not in RULES:
        raise ValueError(f"unknown rule {rule!r}, expected one of {RULES}")
    row = partitions.durfee_counts(n, cap=cap)
    counts = row.counts
    total = row.total
    kmax = len(counts) - 1

    prefix = [0]
    for c in counts:
        prefix.append(prefix[-1] + c)

    if rule == RULE_SYMMETRIC:
        # tail comparisons as exact integer cross-products: P <= eps/2
        def tail_ok(tail_count: int) -> bool:
            return 2 * tail_count * eps.denominator <= eps.numerator * total

        low = 0
        for a in range(1, kmax + 1):
            if tail_ok(prefix[a]):
                low = a
            else:
                break
        high = kmax
        for b in range(kmax - 1, -1, -1):
            if tail_ok(total - prefix[b + 1]):
                high = b
            else:
                break
    else:
        need_num = (eps.denominator - eps.numerator) * total  # mass >= 1-eps
        best = None
        for width in range(0, kmax + 1):
            for a in range(0, kmax - width + 1):
                mass = prefix[a + width + 1] - prefix[a]
                if mass * eps.denominator >= need_num:
                    if best is None or mass > best[0]:
                        best = (mass, a)
            if best is not None:
                low, high = best[1], best[1] + width
                break
        else:  # pragma: no cover - full range always has mass 1
            low, high = 0, kmax

    mass = float(Fraction(prefix[high + 1] - prefix[low], total))
    return ConfidenceInterval(n, float(eps), low, high, mass, rule)


def tail_probability_exact(n: int, t: int, *, cap: int = DEFAULT_MAX_N) -> Fraction:
    """P(h >= t) as an exact ratio of integer counts."""
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    if t == 0:
        return Fraction(1)
    row = partitions.durfee_counts(n, cap=cap)
    if t >= len(row.counts):
        return Fraction(0)
    return Fraction(sum(row.counts[t:]), row.total)


def tail_probability(n: int, t: int, *, cap: int = DEFAULT_MAX_N) -> float:
    """P(h >= t), correctly rounded to float from the exact ratio."""
    return float(tail_probability_exact(n, t, cap=cap))


def format_probability(value: Fraction) -> str:
    """Scientific-notation display that never collapses a nonzero ratio to 0."""
    if value == 0:
        return "0"
    if value == 1:
        return "1"
    f = float(value)
    if f != 0.0:
        return repr(f)
    # below float range: order of magnitude from the exact integers
    exp10 = (value.numerator.bit_length() - value.denominator.bit_length()) * math.log10(2)
    exponent = math.floor(exp10)
    mantissa = value * Fraction(10) ** -exponent
    while mantissa >= 10:
        mantissa /= 10
        exponent += 1
    while mantissa < 1:
        mantissa *= 10
        exponent -= 1
    return f"{float(mantissa):.3f}e{exponent}"


def mode_h(n: int, *, cap: int = DEFAULT_MAX_N) -> int:
    """argmax_k of the exact counts; ties broken toward the smaller k."""
    row = partitions.durfee_counts(n, cap=cap)
    best = 0
    for k, c in enumerate(row.counts):
        if c > row.counts[best]:
            best = k
    return best


def concentration_mass(n: int, epsilon: float, *, cap: int = DEFAULT_MAX_N) -> float:
    """Probability mass of the open window ((1-eps)*mu, (1+eps)*mu), mu the rule of thumb.

    A finite-n diagnostic of the conjectured concentration around the mode;
    expected to increase with n for fixed eps.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    mu = rule_of_thumb(n).value
    lo, hi = (1 - epsilon) * mu, (1 + epsilon) * mu
    row = partitions.durfee_counts(n, cap=cap)
    inside = sum(c for k, c in enumerate(row.counts) if lo < k < hi)
    return float(Fraction(inside, row.total))

import math
from fractions import Fraction

import pytest

from durfee import intervals

TABLE1_HEAD = {50: (2, 5), 100: (3, 7), 200: (5, 9), 300: (7, 11), 400: (8, 13),
               500: (9, 14), 750: (11, 17), 1000: (13, 20), 1250: (15, 22)}


def test_distribution_of_four():
    dist = intervals.durfee_distribution(4)
    assert dist.probabilities == (0.0, 0.8, 0.2)


def test_distribution_of_zero():
    assert intervals.durfee_distribution(0).probabilities == (1.0,)


def test_distribution_sums_to_one():
    for n in (1, 13, 50, 377, 1000):
        dist = intervals.durfee_distribution(n)
        assert abs(sum(dist.probabilities) - 1.0) < 1e-12


def test_distribution_probabilities_match_exact_ratios():
    dist = intervals.durfee_distribution(123)
    for k, p in enumerate(dist.probabilities):
        exact = dist.probability_exact(k)
        if exact:
            assert abs(p - exact) / exact < 1e-12


def test_distribution_mass_two_to_five_at_fifty():
    dist = intervals.durfee_distribution(50)
    assert sum(dist.probabilities[2:6]) >= 0.98


@pytest.mark.parametrize("rule", intervals.RULES)
def test_published_head_row_within_one_unit(rule):
    for n, (low, high) in TABLE1_HEAD.items():
        ci = intervals.confidence_interval(n, 0.02, rule=rule)
        assert abs(ci.low - low) <= 1 and abs(ci.high - high) <= 1, (n, ci)
        assert ci.mass >= 0.98


def test_interval_single_citation():
    for eps in (0.5, 0.02, 1e-6):
        ci = intervals.confidence_interval(1, eps)
        assert (ci.low, ci.high) == (1, 1)
        ci = intervals.confidence_interval(1, eps, rule=intervals.RULE_MINWIDTH)
        assert (ci.low, ci.high) == (1, 1)


def test_interval_zero_citations():
    ci = intervals.confidence_interval(0, 0.02)
    assert (ci.low, ci.high) == (0, 0)
    assert ci.mass == 1.0


def test_symmetric_rule_is_tight():
    # low is the largest feasible a, high the smallest feasible b
    for n in (30, 100, 777):
        ci = intervals.confidence_interval(n, 0.02)
        dist = intervals.durfee_distribution(n)
        half = Fraction(1, 100)
        below = sum(dist.probability_exact(k) for k in range(ci.low + 1))
        assert below > half
        above = sum(
            dist.probability_exact(k) for k in range(ci.high, len(dist.probabilities))
        )
        assert above > half


def test_minwidth_rule_is_minimal():
    for n in (30, 100, 777):
        ci = intervals.confidence_interval(n, 0.02, rule=intervals.RULE_MINWIDTH)
        dist = intervals.durfee_distribution(n)
        need = Fraction(98, 100)
        width = ci.high - ci.low
        kmax = len(dist.probabilities) - 1
        for a in range(kmax + 1):
            b = a + width - 1
            if b > kmax:
                break
            assert sum(dist.probability_exact(k) for k in range(a, b + 1)) < need


def test_interval_rejects_bad_inputs():
    with pytest.raises(ValueError):
        intervals.confidence_interval(10, 0.0)
    with pytest.raises(ValueError):
        intervals.confidence_interval(10, 1.0)
    with pytest.raises(ValueError):
        intervals.confidence_interval(10, 0.02, rule="widest")


def test_rule_of_thumb_published_values():
    assert intervals.rule_of_thumb(1012).display == 17.2
    assert intervals.rule_of_thumb(6730).display == 44.3
    assert intervals.rule_of_thumb(0).display == 0.0


def test_rule_of_thumb_closed_form():
    est = intervals.rule_of_thumb(777)
    expected = math.sqrt(6) * math.log(2) / math.pi * math.sqrt(777)
    assert est.value == pytest.approx(expected, rel=1e-15)


def test_rule_of_thumb_below_hard_bound():
    for n in range(1, 3000):
        assert intervals.rule_of_thumb(n).value <= intervals.max_h(n)
    assert intervals.rule_of_thumb(10**8).value <= intervals.max_h(10**8)


def test_max_h_values():
    assert intervals.max_h(1677) == 40
    assert intervals.max_h(0) == 0
    assert intervals.max_h(99) == 9


def test_tail_probability_trivia():
    assert intervals.tail_probability(100, 0) == 1.0
    assert intervals.tail_probability(4, 2) == 0.2
    assert intervals.tail_probability(100, intervals.max_h(100) + 1) == 0.0


def test_tail_probability_weakly_decreasing():
    for n in (4, 30, 100):
        values = [intervals.tail_probability(n, t) for t in range(intervals.max_h(n) + 2)]
        for a, b in zip(values, values[1:]):
            assert a >= b


def test_tail_probability_okounkov_claim():
    assert intervals.tail_probability(1677, 32) < 1e-7


def test_format_probability_never_zero_for_nonzero():
    tiny = Fraction(3, 10**400)
    text = intervals.format_probability(tiny)
    assert text.endswith("e-400") and text.startswith("3.000")
    assert intervals.format_probability(Fraction(0)) == "0"
    assert intervals.format_probability(Fraction(1)) == "1"
    assert intervals.format_probability(Fraction(1, 5)) == "0.2"


def test_mode_values():
    assert intervals.mode_h(4) == 1
    assert intervals.mode_h(0) == 0
    assert 13 <= intervals.mode_h(1000) <= 20


def test_mode_tie_breaks_to_smaller_k():
    # n=1 and n=2 have single-support distributions; construct a check on n=3:
    # partitions (3),(2,1),(1,1,1) all have durfee 1, so mode is 1 trivially.
    assert intervals.mode_h(3) == 1


def test_mode_inside_interval_for_published_sizes():
    for n in (50, 100, 200, 300, 400, 500, 750, 1000, 1250, 1500, 2000):
        ci = intervals.confidence_interval(n, 0.02)
        assert ci.low <= intervals.mode_h(n) <= ci.high


def test_concentration_window_matches_manual_sum():
    n, eps = 100, 1.0
    dist = intervals.durfee_distribution(n)
    mu = intervals.rule_of_thumb(n).value
    expected = sum(
        dist.probability_exact(k)
        for k in range(len(dist.probabilities))
        if 0 < k < 2 * mu
    )
    assert intervals.concentration_mass(n, eps) == pytest.approx(float(expected), abs=1e-15)
    # h=0 is impossible for n >= 1 and 2*mu exceeds max_h here, so the mass is 1
    assert intervals.concentration_mass(n, eps) == 1.0


def test_concentration_rejects_bad_inputs():
    with pytest.raises(ValueError):
        intervals.concentration_mass(0, 0.2)
    with pytest.raises(ValueError):
        intervals.concentration_mass(100, 0.0)

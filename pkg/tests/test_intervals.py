from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from probsession.calculus import Interval
from probsession.typesys import classify_interval_set, is_proper, is_reachable, tighten

from strategies import interval_sets

GRID = 20


def full(n):
    return [Interval.full()] * n


def test_four_open_intervals_are_proper_and_reachable():
    assert classify_interval_set(full(4)) == (True, True)


def test_open_interval_with_narrow_partner():
    deltas = [Interval.full(), Interval(Fraction(95, 100), 1)]
    verdict = classify_interval_set(deltas)
    assert verdict.proper
    assert not verdict.reachable


def test_single_interval():
    assert classify_interval_set([Interval.point(1)]) == (True, True)
    assert classify_interval_set([Interval.full()]) == (True, False)
    assert classify_interval_set([Interval(0, Fraction(1, 2))]) == (False, False)


def test_points_summing_to_one():
    deltas = [Interval.point(Fraction(3, 5)), Interval.point(Fraction(2, 5))]
    assert classify_interval_set(deltas) == (True, True)


def test_empty_set_is_rejected():
    with pytest.raises(ValueError):
        classify_interval_set([])


@settings(max_examples=10_000)
@given(interval_sets())
def test_reachable_implies_proper(deltas):
    if is_reachable(deltas):
        assert is_proper(deltas)


@settings(max_examples=2_000)
@given(interval_sets())
def test_tightening_a_proper_set_makes_it_reachable(deltas):
    if is_proper(deltas):
        tight = tighten(deltas)
        assert is_reachable(tight)
        if is_reachable(deltas):
            assert tight == deltas


# ---------------------------------------------------------------------------
# Перебор на сетке 1/20
# ---------------------------------------------------------------------------

grid_sets = st.lists(
    st.tuples(st.integers(0, GRID), st.integers(0, GRID)).map(sorted),
    min_size=1, max_size=4,
)


def attainable(bounds, index, endpoint):
    sums = {0}
    for j, (lower, upper) in enumerate(bounds):
        if j != index:
            sums = {s + v for s in sums for v in range(lower, upper + 1)}
    return GRID - endpoint in sums


def reachable_by_search(bounds):
    return all(
        attainable(bounds, i, endpoint)
        for i, (lower, upper) in enumerate(bounds)
        for endpoint in (lower, upper)
    )


@settings(max_examples=2_000)
@given(grid_sets)
def test_reachability_matches_exhaustive_search(bounds):
    deltas = [Interval(Fraction(lower, GRID), Fraction(upper, GRID)) for lower, upper in bounds]
    assert is_reachable(deltas) == reachable_by_search(bounds)


def test_tighten_narrows_unreachable_end():
    deltas = [Interval.full(), Interval(Fraction(19, 20), 1)]
    assert tighten(deltas) == [Interval(0, Fraction(1, 20)), Interval(Fraction(19, 20), 1)]


def test_tighten_rejects_improper_set():
    with pytest.raises(ValueError):
        tighten([Interval(0, Fraction(1, 4)), Interval(0, Fraction(1, 4))])
    with pytest.raises(ValueError):
        tighten([])

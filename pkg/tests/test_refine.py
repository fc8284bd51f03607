from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from probsession.calculus import Interval, SessionRole
from probsession.checker import Typing
from probsession.errors import DomainMismatch, EmptyInterval, ShapeMismatch
from probsession.loaders import parse_global_type, parse_local_type
from probsession.typesys import (
    END, erase, erased_equal, intersect_global, intersect_local, intersect_typing, project,
    relax_intervals, types_equal,
)

from strategies import local_types, narrowed, probs


def deltas_of(local):
    found = []

    def visit(term):
        for branch in getattr(term, "branches", ()):
            if hasattr(branch, "delta"):
                found.append(branch.delta)
            visit(branch.cont)
        if hasattr(term, "body"):
            visit(term.body)

    visit(local)
    return found


def test_erase_drops_every_interval(global_types):
    local = project(global_types["ga_bounded.gty"], "rB")
    erased = erase(local)
    assert deltas_of(erased)
    assert all(delta is None for delta in deltas_of(erased))
    assert erased_equal(erased, local)
    assert not types_equal(erased, local)


def test_erase_rejects_global_types(global_types):
    with pytest.raises(TypeError):
        erase(global_types["ga_open.gty"])


def test_relax_intervals_opens_everything(global_types):
    assert relax_intervals(global_types["ga_narrow.gty"]) == global_types["ga_open.gty"]


def test_intersection_of_bounded_and_narrow(global_types):
    meet = intersect_global(global_types["ga_bounded.gty"], global_types["ga_narrow.gty"])
    outer = {b.label: b for b in meet.body.branches}
    assert outer["talk"].delta == Interval(Fraction(19, 20), 1)
    assert outer["quit"].delta == Interval(0, Fraction(1, 20))
    inner = outer["talk"].cont
    assert {b.label: b for b in inner.branches}["yes"].delta == Interval(Fraction(1, 2), Fraction(7, 10))


def test_disjoint_intervals_have_no_intersection(global_types):
    with pytest.raises(EmptyInterval) as info:
        intersect_global(global_types["ga_bounded.gty"], global_types["ga_unreachable.gty"])
    assert info.value.label == "quit"


def test_different_shapes_have_no_intersection(global_types):
    other = parse_global_type("rA -> rB { 1: l(nat). end }")
    with pytest.raises(ShapeMismatch):
        intersect_global(global_types["ga_open.gty"], other)


def test_local_intersection_with_erased_side():
    left = parse_local_type("rB (+){ !a(nat). end , !b(nat). end }")
    right = parse_local_type("rB (+){ [0,1/2]: !a(nat). end , [1/2,1]: !b(nat). end }")
    assert intersect_local(left, right) == right


def test_typing_intersection_requires_same_channels():
    left = Typing({SessionRole("s", "rA"): END})
    right = Typing({SessionRole("s", "rB"): END})
    with pytest.raises(DomainMismatch):
        intersect_typing(left, right)


def test_typing_intersection_is_pointwise():
    channel = SessionRole("s", "rA")
    left = Typing({channel: parse_local_type("rB (+){ [0,3/4]: !a(nat). end , [1/4,1]: !b(nat). end }")})
    right = Typing({channel: parse_local_type("rB (+){ [1/4,1]: !a(nat). end , [0,3/4]: !b(nat). end }")})
    meet = intersect_typing(left, right)
    expected = parse_local_type("rB (+){ [1/4,3/4]: !a(nat). end , [1/4,3/4]: !b(nat). end }")
    assert meet[channel] == expected


@given(local_types(), probs, probs, probs, probs)
def test_intersection_narrows_every_interval(local, a, b, c, d):
    lo1, hi1 = sorted((a, b))
    lo2, hi2 = sorted((c, d))
    assume(max(lo1, lo2) <= min(hi1, hi2))
    left, right = narrowed(local, lo1, hi1), narrowed(local, lo2, hi2)
    meet = intersect_local(left, right)
    assert meet == narrowed(local, max(lo1, lo2), min(hi1, hi2))
    assert erased_equal(meet, local)
    assert intersect_local(right, left) == meet


@given(local_types())
def test_intersection_with_itself(local):
    assert intersect_local(local, local) == local


@given(local_types(), st.lists(st.tuples(probs, probs), min_size=3, max_size=3))
def test_intersection_is_associative(local, bounds):
    intervals = [sorted(pair) for pair in bounds]
    assume(max(lo for lo, _ in intervals) <= min(hi for _, hi in intervals))
    first, second, third = (narrowed(local, lo, hi) for lo, hi in intervals)
    left = intersect_local(intersect_local(first, second), third)
    right = intersect_local(first, intersect_local(second, third))
    assert left == right


@given(local_types(), probs, probs)
def test_open_intervals_are_the_identity(local, a, b):
    bounded = narrowed(local, min(a, b), max(a, b))
    opened = relax_intervals(bounded)
    assert intersect_local(opened, bounded) == bounded
    assert intersect_local(bounded, opened) == bounded

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from probsession.calculus import Interval, format_prob, short_prob, to_prob
from probsession.errors import BadInterval, InvalidProbability


@pytest.mark.parametrize("text, expected", [
    ("0.6", Fraction(3, 5)),
    ("0.05", Fraction(1, 20)),
    ("2/5", Fraction(2, 5)),
    ("1", Fraction(1)),
    ("0", Fraction(0)),
])
def test_to_prob_is_exact(text, expected):
    assert to_prob(text) == expected


@pytest.mark.parametrize("text", ["1.5", "3/2", "abc", "1/0"])
def test_to_prob_rejects_out_of_range(text):
    with pytest.raises(InvalidProbability):
        to_prob(text)


def test_to_prob_rejects_float():
    with pytest.raises(TypeError):
        to_prob(0.6)


def test_format_prob_always_has_denominator():
    assert format_prob(1) == "1/1"
    assert format_prob(Fraction(3, 5)) == "3/5"
    assert short_prob(1) == "1"
    assert short_prob(Fraction(1, 20)) == "1/20"


def test_interval_invariants():
    with pytest.raises(BadInterval):
        Interval(Fraction(1, 2), Fraction(1, 3))
    with pytest.raises(BadInterval):
        Interval(0, 2)
    delta = Interval(Fraction(1, 5), Fraction(2, 5))
    assert Fraction(3, 10) in delta
    assert Fraction(1, 2) not in delta
    assert Interval.point(Fraction(1, 2)).is_point()
    assert str(delta) == "[1/5,2/5]"


def test_interval_intersection_and_empty_meet():
    left = Interval(0, Fraction(1, 2))
    right = Interval(Fraction(1, 4), 1)
    assert left & right == Interval(Fraction(1, 4), Fraction(1, 2))
    assert Interval(0, Fraction(1, 10)) & Interval(Fraction(1, 5), 1) is None


def test_widen_clamps_to_unit_interval():
    assert Interval(Fraction(1, 10), Fraction(19, 20)).widen(Fraction(1, 5)) == Interval(0, 1)
    assert Interval(Fraction(1, 2), Fraction(1, 2)).widen(Fraction(1, 10)) == \
        Interval(Fraction(2, 5), Fraction(3, 5))


fractions = st.fractions(min_value=0, max_value=1, max_denominator=50)


@given(fractions, fractions, fractions, fractions)
def test_intersection_is_commutative(a, b, c, d):
    left = Interval(min(a, b), max(a, b))
    right = Interval(min(c, d), max(c, d))
    assert left & right == right & left

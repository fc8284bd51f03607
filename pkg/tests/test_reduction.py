from fractions import Fraction

from probsession.calculus import Interval, SessionRole
from probsession.checker import session_typing, type_step
from probsession.dynamics import EPS, Comm
from probsession.loaders import parse_global_type
from probsession.typesys import END, BranchT, SelectT

ALICE = SessionRole("s", "rA")
BOB = SessionRole("s", "rB")


def two_way():
    return session_typing("s", parse_global_type(
        "rA -> rB { [1/2,1]: yes(string). end , [0,1/2]: no(string). end }"
    ))


def test_matching_select_and_branch_reduce_together():
    (step,) = type_step(two_way(), Comm("rA", "rB", "yes"))
    assert step.delta == Interval(Fraction(1, 2), 1)
    assert step.target[ALICE] == END
    assert step.target[BOB] == END


def test_unknown_label_does_not_reduce():
    assert type_step(two_way(), Comm("rA", "rB", "maybe")) == []


def test_wrong_direction_does_not_reduce():
    assert type_step(two_way(), Comm("rB", "rA", "yes")) == []


def test_call_label_leaves_typing_alone():
    assert type_step(two_way(), EPS) == []


def test_recursive_types_are_unfolded(global_types):
    typing = session_typing("s", global_types["ga_open.gty"])
    (step,) = type_step(typing, Comm("rB", "rA", "talk"))
    assert step.delta == Interval.full()
    assert isinstance(step.target[ALICE], SelectT)
    assert isinstance(step.target[BOB], BranchT)

    (back,) = type_step(step.target, Comm("rA", "rB", "yes"))
    assert back.target.equivalent(typing)

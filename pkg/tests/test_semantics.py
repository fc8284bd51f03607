from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from probsession.calculus import NIL, Int
from probsession.dynamics import (
    EPS, CallRedex, Comm, ComRedex, axiom_rewrites, decompose, enabled_steps, find_redexes,
    next_proc,
)
from probsession.errors import ArityMismatch, SessionError
from probsession.loaders import parse_process

from strategies import processes


def test_com_two_steps(corpus):
    steps = enabled_steps(corpus["com_two"])
    assert [s.label for s in steps] == [Comm("rA", "rB", "no"), Comm("rA", "rB", "yes")]
    assert [s.prob for s in steps] == [Fraction(2, 5), Fraction(3, 5)]
    assert all(s.target == NIL for s in steps)


def test_system_simple_starts_with_two_calls(corpus):
    process = corpus["system_simple"]
    assert next_proc(process) == 2
    steps = enabled_steps(process)
    assert [s.label for s in steps] == [EPS, EPS]
    assert [s.prob for s in steps] == [Fraction(1, 2), Fraction(1, 2)]
    assert steps[0].key != steps[1].key


def test_system_full_has_one_redex(corpus):
    assert next_proc(corpus["system_full"]) == 1


def test_call_demo_unfolds_to_nil(corpus):
    steps = enabled_steps(corpus["call_demo"])
    assert len(steps) == 1
    assert steps[0].label == EPS
    assert steps[0].prob == 1
    assert steps[0].target == NIL


def test_received_value_is_substituted():
    process = parse_process(
        "new s . (s[rA][rB](+){ 1: l(5). 0 } | s[rB][rA]&{ l(x). s[rB][rC](+){ 1: m(x). 0 } })"
    )
    (step,) = enabled_steps(process)
    assert step.label == Comm("rA", "rB", "l")
    (atom,) = decompose(step.target).atoms
    assert atom.branches[0].payload == Int(5)


def test_uniform_scheduler_shares_probability():
    process = parse_process(
        "def X() = 0 in (new s . (s[rA][rB](+){ 1/2: a(1). 0 , 1/2: b(1). 0 }"
        " | s[rB][rA]&{ a(x). 0 , b(x). 0 }) | X())"
    )
    scan = find_redexes(process)
    assert any(isinstance(r, CallRedex) for r in scan.redexes)
    assert any(isinstance(r, ComRedex) for r in scan.redexes)
    steps = enabled_steps(process)
    assert [s.label for s in steps] == [EPS, Comm("rA", "rB", "a"), Comm("rA", "rB", "b")]
    assert [s.prob for s in steps] == [Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)]
    assert sum(s.prob for s in steps) == 1


def test_congruent_targets_are_merged():
    process = parse_process("def X() = 0 in (X() | X())")
    merged = enabled_steps(process)
    assert len(merged) == 1
    assert merged[0].prob == 1
    unmerged = enabled_steps(process, merge=False)
    assert [s.prob for s in unmerged] == [Fraction(1, 2), Fraction(1, 2)]


def test_zero_probability_branch_never_fires():
    process = parse_process(
        "new s . (s[rA][rB](+){ 1: a(1). 0 , 0: b(1). 0 } | s[rB][rA]&{ a(x). 0 , b(x). 0 })"
    )
    assert [s.label.label for s in enabled_steps(process)] == ["a"]


def test_label_mismatch_blocks_communication(corpus):
    process = corpus["deadlock_mismatch"]
    scan = find_redexes(process)
    assert scan.redexes == ()
    assert len(scan.mismatches) == 1
    assert scan.mismatches[0].labels == ("hello",)
    assert enabled_steps(process) == []


def test_subset_of_branch_labels_is_enough():
    process = parse_process(
        "new s . (s[rA][rB](+){ 1: yes(1). 0 } | s[rB][rA]&{ yes(x). 0 , no(x). 0 })"
    )
    assert next_proc(process) == 1


def test_wrong_arity_call():
    with pytest.raises(ArityMismatch):
        enabled_steps(parse_process("def X(a, b) = 0 in X(1)"))


def test_steps_sum_to_one_along_system_simple(corpus):
    frontier = [corpus["system_simple"]]
    for _ in range(4):
        successors = []
        for state in frontier:
            steps = enabled_steps(state)
            if steps:
                assert sum(s.prob for s in steps) == 1
            successors.extend(s.target for s in steps)
        frontier = successors[:20]


def step_view(process):
    try:
        steps = enabled_steps(process)
    except SessionError as error:
        return type(error).__name__
    return sorted((str(s.label), s.prob, s.key) for s in steps)


@given(processes(depth=3), st.data())
def test_steps_of_congruent_processes_agree(process, data):
    axiom, rewritten = data.draw(st.sampled_from(axiom_rewrites(process)))
    assert step_view(rewritten) == step_view(process), axiom


def test_steps_ignore_component_order_and_bound_names():
    shuffled = parse_process(
        "new k : < rA -> rB { 1: a(nat). end } > . "
        "(k[rB][rA]&{ a(x). 0 } | k[rA][rB](+){ 1: a(1). 0 })"
    )
    original = parse_process(
        "new s : < rA -> rB { 1: a(nat). end } > . "
        "(s[rA][rB](+){ 1: a(1). 0 } | s[rB][rA]&{ a(y). 0 })"
    )
    assert step_view(shuffled) == step_view(original)
    assert len(step_view(original)) == 1

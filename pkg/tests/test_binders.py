from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from probsession.calculus import (
    ONE, NIL, Branch, BranchArm, Call, Def, Int, Select, SelectBranch, SessionName, SessionRole,
    Str, Var, binder_report, check_probability_complete, free_channels, free_names, free_proc_vars,
    instantiate, rename_names, rename_proc_vars, struct_equal, substitute,
)
from probsession.calculus.binders import term_names
from probsession.errors import ArityMismatch, IllFormedSubstitution
from probsession.loaders import parse_process

from strategies import SESSIONS, VARS, processes


def send(chan, payload, cont=NIL, partner="rA", label="m"):
    return Select(chan, partner, (SelectBranch(ONE, label, payload, cont),))


def test_free_names_respect_binders():
    process = parse_process("new s . s[rA][rB]&{ l(x). x[rB](+){ 1: m(x). 0 } } | t[rA][rB]&{ l(z). 0 }")
    assert free_names(process) == {"t"}


def test_binder_report_of_recursive_definition(corpus):
    report = binder_report(corpus["system_simple"])
    assert report.free_channels == frozenset()
    assert report.free_proc_vars == frozenset()
    assert report.declared_proc_vars == {"A", "B"}


def test_free_channels_include_call_arguments():
    process = Call("X", (SessionRole("s", "rA"), Int(1), Var("y")))
    assert free_channels(process) == {SessionRole("s", "rA"), Var("y")}


def test_free_proc_vars_of_definition():
    process = parse_process("def X(y) = (X(y) | Y()) in X(v)")
    assert free_proc_vars(process) == {"Y"}


def test_substitution_avoids_capture():
    process = Branch(Var("y"), "rA", (BranchArm("l", "x", send(Var("x"), Var("z"))),))
    result = substitute(process, {"z": Var("x")})
    arm = result.branches[0]
    assert arm.binder != "x"
    assert arm.cont.chan == Var(arm.binder)
    assert arm.cont.branches[0].payload == Var("x")


def test_substitution_leaves_bound_occurrences():
    process = Branch(Var("y"), "rA", (BranchArm("l", "x", send(Var("x"), Var("x"))),))
    assert substitute(process, {"x": Int(3)}) == process


def test_session_substituted_by_literal_is_ill_formed():
    with pytest.raises(IllFormedSubstitution):
        substitute(send(SessionRole("s", "rA"), Int(0)), {"s": Int(3)})


def test_channel_variable_receives_session_role():
    result = substitute(send(Var("y"), Var("y")), {"y": SessionRole("s", "rB")})
    assert result.chan == SessionRole("s", "rB")
    assert result.branches[0].payload == SessionRole("s", "rB")


def test_instantiate_checks_arity():
    with pytest.raises(ArityMismatch):
        instantiate("X", ("a", "b"), (Int(1),), NIL)


def test_instantiate_replaces_parameters():
    body = send(Var("y"), Var("v"))
    result = instantiate("X", ("y", "v"), (SessionRole("s", "rA"), SessionName("k")), body)
    assert result == send(SessionRole("s", "rA"), SessionName("k"))


def test_rename_proc_vars_stops_at_shadowing_definition():
    inner = Def("X", (), Call("X"), Call("X"))
    renamed = rename_proc_vars(Def("Y", (), NIL, inner), {"X": "Z"})
    assert renamed.scope == inner


def test_incomplete_select_is_reported():
    process = Select(SessionRole("s", "rA"), "rB", (
        SelectBranch(Fraction(1, 2), "a", Int(0), NIL),
        SelectBranch(Fraction(1, 4), "b", Int(0), NIL),
    ))
    found = check_probability_complete(process)
    assert len(found) == 1
    assert found[0].total == Fraction(3, 4)


def test_fixtures_are_probability_complete(corpus):
    for name, process in corpus.items():
        assert check_probability_complete(process) == [], name


def test_alpha_equivalent_restrictions():
    left = parse_process("new s . s[rA][rB](+){ 1: l(s). 0 }")
    right = parse_process("new t . t[rA][rB](+){ 1: l(t). 0 }")
    assert struct_equal(left, right)
    assert not struct_equal(left, parse_process("new t . t[rA][rB](+){ 1: l(s). 0 }"))


@given(processes(depth=3))
def test_renaming_a_free_name(process):
    names = free_names(process)
    renamed = rename_names(process, {name: "w" for name in names})
    expected = {"w"} if names else set()
    assert free_names(renamed) == expected


@given(processes(depth=3))
def test_empty_substitution_is_identity(process):
    assert substitute(process, {}) == process


@given(processes(depth=3), st.sets(st.sampled_from(VARS + SESSIONS), min_size=1))
def test_substitution_outside_free_names_is_identity(process, names):
    domain = names - free_names(process)
    assume(domain)
    assert substitute(process, {name: Int(7) for name in domain}) == process


@given(
    processes(depth=3),
    st.sampled_from(VARS + SESSIONS),
    st.sampled_from([Var("k"), Var("s"), SessionName("k"), SessionName("x"), Int(3), Str("v")]),
)
def test_substitution_free_names(process, name, value):
    try:
        result = substitute(process, {name: value})
    except IllFormedSubstitution:
        assume(False)
    assert free_names(result) <= (free_names(process) - {name}) | term_names(value)

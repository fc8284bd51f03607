from hypothesis import given
from hypothesis import strategies as st

from probsession.calculus import (
    NIL, Call, Par, Restrict, SessionName, Var, par, rename_names, struct_equal,
)
from probsession.dynamics import axiom_rewrites, congruent, decompose, normal_form, state_key
from probsession.loaders import parse_process

from strategies import processes

SEND = "s[rA][rB](+){ 1: l(1). 0 }"
RECV = "s[rB][rA]&{ l(x). 0 }"


def test_nil_is_unit(corpus):
    for process in corpus.values():
        assert congruent(Par(process, NIL), process)
        assert congruent(Par(NIL, process), process)


def test_parallel_components_commute():
    left = parse_process(f"new s . ({SEND} | {RECV})")
    right = parse_process(f"new s . ({RECV} | {SEND})")
    assert congruent(left, right)
    assert state_key(left) == state_key(right)


def test_restriction_extrudes_over_unrelated_component():
    inner = parse_process(f"(new s . {SEND}) | t[rB][rA]&{{ l(x). 0 }}")
    outer = parse_process(f"new s . ({SEND} | t[rB][rA]&{{ l(x). 0 }})")
    assert congruent(inner, outer)


def test_clashing_restrictions_stay_apart():
    process = parse_process(f"(new s . {SEND}) | (new s . {RECV})")
    layers = decompose(normal_form(process))
    names = [name for name, _ in layers.restricts]
    assert len(names) == 2
    assert len(set(names)) == 2
    assert not congruent(process, parse_process(f"new s . ({SEND} | {RECV})"))


def test_dead_binders_are_dropped():
    assert normal_form(parse_process("new s . 0")) == NIL
    assert normal_form(parse_process("new s . X()")) == Call("X")
    assert normal_form(parse_process("def X() = 0 in 0")) == NIL
    assert normal_form(parse_process("def X() = 0 in Y()")) == Call("Y")


def test_normal_form_shape(corpus):
    normal = normal_form(corpus["system_simple"])
    assert isinstance(normal, Restrict)
    layers = decompose(normal)
    assert [name for name, _ in layers.restricts] == ["s"]
    assert sorted(d.name for d in layers.defs) == ["A", "B"]
    assert len(layers.atoms) == 2


def test_state_key_ignores_bound_names():
    left = parse_process(f"new s . ({SEND} | {RECV})")
    right = parse_process("new k . (k[rA][rB](+){ 1: l(1). 0 } | k[rB][rA]&{ l(y). 0 })")
    assert state_key(left) == state_key(right)


def test_components_sharing_bound_names_commute():
    first = "a[r1][r2](+){ 1: l(b). 0 }"
    second = "b[r1][r2](+){ 1: l(a). 0 }"
    third = "a[r3][r4](+){ 1: m(1). 0 }"
    left = parse_process(f"new a . new b . ({first} | {second} | {third})")
    right = parse_process(f"new a . new b . ({second} | {first} | {third})")
    assert congruent(left, right)
    assert state_key(left) == state_key(right)


def test_nested_order_ignores_branch_binder():
    body = "({0}[rB](+){{ 1: a(1). 0 }} | u[rA][rB](+){{ 1: b(1). 0 }})"
    left = parse_process(f"s[rB][rA]&{{ l(x). {body.format('x')} }}")
    right = parse_process(f"s[rB][rA]&{{ l(z). {body.format('z')} }}")
    assert congruent(left, right)
    assert state_key(left) == state_key(right)


def test_state_key_tells_variable_from_session():
    assert state_key(Call("X", (Var("x"),))) != state_key(Call("X", (SessionName("x"),)))
    assert str(Call("X", (Var("x"),))) == str(Call("X", (SessionName("x"),)))


def test_single_axiom_rewrites_are_congruent(corpus):
    for name in ("com_two", "call_demo", "system_simple"):
        process = corpus[name]
        rewrites = axiom_rewrites(process)
        assert rewrites
        for axiom, rewritten in rewrites:
            assert congruent(process, rewritten), (name, axiom)


@given(
    st.lists(processes(depth=2, allow_par=False, binders=False), min_size=2, max_size=4)
    .flatmap(lambda atoms: st.tuples(st.just(atoms), st.permutations(atoms)))
)
def test_atom_order_does_not_matter(case):
    atoms, shuffled = case
    assert struct_equal(normal_form(par(*atoms)), normal_form(par(*shuffled)))


@given(processes(depth=3))
def test_adding_nil_keeps_state_key(process):
    assert state_key(Par(process, NIL)) == state_key(process)


@given(
    st.lists(processes(depth=2, scope_sessions=frozenset({"s", "t"}), allow_par=False),
             min_size=2, max_size=4)
    .flatmap(lambda atoms: st.tuples(st.just(atoms), st.permutations(atoms)))
)
def test_shuffled_and_renamed_components_are_congruent(case):
    atoms, shuffled = case
    renamed = [rename_names(atom, {"s": "w1", "t": "w2"}) for atom in shuffled]
    left = Restrict("s", Restrict("t", par(*atoms)))
    right = Restrict("w2", Restrict("w1", par(*renamed)))
    assert congruent(left, right)
    assert state_key(left) == state_key(right)

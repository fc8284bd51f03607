"""Генераторы hypothesis для процессов, интервалов и локальных типов"""

from fractions import Fraction

from hypothesis import strategies as st

from probsession.calculus import (
    Bool, Branch, BranchArm, Call, Def, Int, Interval, NIL, Restrict, Select, SelectBranch,
    SessionName, SessionRole, Str, Var, par,
)
from probsession.typesys import END, BranchT, LBranch, LSelect, Rec, SelectT, Sort, TVar
from probsession.typesys.refine import _map_deltas

VARS = ("x", "y", "z")
SESSIONS = ("s", "t", "u")
ROLES = ("rA", "rB", "rC")
LABELS = ("l1", "l2", "ok")
PROCS = ("X", "Y")
STRINGS = ("v", "two words")

probs = st.fractions(min_value=0, max_value=1, max_denominator=12)


def payloads(scope_vars, scope_sessions):
    options = [
        st.builds(Int, st.integers(-5, 5)),
        st.builds(Bool, st.booleans()),
        st.builds(Str, st.sampled_from(STRINGS)),
    ]
    if scope_vars:
        options.append(st.sampled_from(sorted(scope_vars)).map(Var))
    if scope_sessions:
        options.append(st.sampled_from(sorted(scope_sessions)).map(SessionName))
    return st.one_of(options)


def channels():
    return st.one_of(
        st.builds(SessionRole, st.sampled_from(SESSIONS), st.sampled_from(ROLES)),
        st.sampled_from(VARS).map(Var),
    )


@st.composite
def processes(draw, depth=4, scope_vars=frozenset(), scope_sessions=frozenset(), allow_par=True,
              binders=True):
    """
    Процессы, печать которых однозначно читается обратно: Var и SessionName
    встречаются в позициях значений только под своими связывателями

    binders=False исключает new и def на любой глубине.
    """
    kinds = ["nil", "call"]
    if depth > 0:
        kinds += ["select", "branch"]
        if binders:
            kinds += ["restrict", "def"]
        if allow_par:
            kinds.append("par")
    kind = draw(st.sampled_from(kinds))

    def child(extra_vars=(), extra_sessions=(), **options):
        return processes(depth - 1, scope_vars | set(extra_vars), scope_sessions | set(extra_sessions),
                         binders=binders, **options)

    if kind == "nil":
        return NIL
    if kind == "call":
        args = draw(st.lists(
            st.one_of(payloads(scope_vars, scope_sessions),
                      st.builds(SessionRole, st.sampled_from(SESSIONS), st.sampled_from(ROLES))),
            max_size=2,
        ))
        return Call(draw(st.sampled_from(PROCS)), tuple(args))
    if kind == "select":
        labels = draw(st.lists(st.sampled_from(LABELS), min_size=1, max_size=3, unique=True))
        branches = tuple(
            SelectBranch(draw(probs), label, draw(payloads(scope_vars, scope_sessions)), draw(child()))
            for label in labels
        )
        return Select(draw(channels()), draw(st.sampled_from(ROLES)), branches)
    if kind == "branch":
        labels = draw(st.lists(st.sampled_from(LABELS), min_size=1, max_size=3, unique=True))
        arms = []
        for label in labels:
            binder = draw(st.sampled_from(VARS))
            arms.append(BranchArm(label, binder, draw(child(extra_vars=[binder]))))
        return Branch(draw(channels()), draw(st.sampled_from(ROLES)), tuple(arms))
    if kind == "restrict":
        session = draw(st.sampled_from(SESSIONS))
        body = draw(child(extra_sessions=[session]))
        return Restrict(session, body, draw(st.sampled_from([None, END])))
    if kind == "def":
        params = tuple(draw(st.lists(st.sampled_from(VARS), max_size=2, unique=True)))
        body = draw(child(extra_vars=params))
        return Def(draw(st.sampled_from(PROCS)), params, body, draw(child()))
    atoms = draw(st.lists(child(allow_par=False), min_size=2, max_size=3))
    return par(*atoms)


@st.composite
def interval_sets(draw, min_size=1, max_size=5):
    """Непустые наборы интервалов с концами из небольшой сетки"""
    size = draw(st.integers(min_size, max_size))
    deltas = []
    for _ in range(size):
        a, b = draw(probs), draw(probs)
        deltas.append(Interval(min(a, b), max(a, b)))
    return deltas


@st.composite
def local_types(draw, depth=3, type_vars=(), guarded=False):
    """Локальные типы с интервалами [0,1]; guarded - только выбор или ветвление"""
    options = []
    if not guarded:
        options.append("end")
        if type_vars:
            options.append("var")
        if depth > 0:
            options.append("rec")
    if depth > 0 or guarded:
        options += ["select", "branch"]
    kind = draw(st.sampled_from(options))
    if kind == "end":
        return END
    if kind == "var":
        return TVar(draw(st.sampled_from(type_vars)))
    if kind == "rec":
        name = f"t{depth}"
        return Rec(name, draw(local_types(depth - 1, type_vars + (name,), guarded=True)))
    partner = draw(st.sampled_from(ROLES))
    labels = draw(st.lists(st.sampled_from(LABELS), min_size=1, max_size=3, unique=True))
    sort = draw(st.sampled_from(list(Sort)))
    child = dict(depth=max(depth - 1, 0), type_vars=type_vars)
    if kind == "select":
        return SelectT(partner, tuple(
            LSelect(Interval.full(), label, sort, draw(local_types(**child))) for label in labels
        ))
    return BranchT(partner, tuple(
        LBranch(label, sort, draw(local_types(**child))) for label in labels
    ))


def narrowed(local_type, lower, upper):
    """Тот же тип с интервалом [lower, upper] во всех выборах"""
    return _map_deltas(local_type, lambda _delta: Interval(Fraction(lower), Fraction(upper)))

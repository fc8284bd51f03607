"""
Альфа-эквивалентность процессов

Каноническая форма: связанные имена заменяются на имена по глубине связывания
(_n0, _n1, ... и _X0, _X1, ... для процессных переменных), ветви выборов
упорядочиваются по меткам. Такие имена не порождаются грамматикой, поэтому
не пересекаются со свободными именами.
"""

from .process import (
    Branch, BranchArm, Call, Def, Nil, Par, Restrict, Select, SelectBranch, SessionName,
    SessionRole, Var,
)


def _term(term, names):
    if isinstance(term, Var):
        return Var(names.get(term.name, term.name))
    if isinstance(term, SessionName):
        return SessionName(names.get(term.name, term.name))
    if isinstance(term, SessionRole):
        return SessionRole(names.get(term.session, term.session), term.role)
    return term


def _canon(process, names, pvars, depth, pdepth):
    if isinstance(process, Nil):
        return process
    if isinstance(process, Par):
        return Par(_canon(process.left, names, pvars, depth, pdepth),
                   _canon(process.right, names, pvars, depth, pdepth))
    if isinstance(process, Select):
        branches = sorted(process.branches, key=lambda b: b.label)
        return Select(_term(process.chan, names), process.partner, tuple(
            SelectBranch(b.prob, b.label, _term(b.payload, names),
                         _canon(b.cont, names, pvars, depth, pdepth))
            for b in branches
        ))
    if isinstance(process, Branch):
        arms = []
        bound = f"_n{depth}"
        for arm in sorted(process.branches, key=lambda a: a.label):
            inner = {**names, arm.binder: bound}
            arms.append(BranchArm(arm.label, bound, _canon(arm.cont, inner, pvars, depth + 1, pdepth)))
        return Branch(_term(process.chan, names), process.partner, tuple(arms))
    if isinstance(process, Restrict):
        bound = f"_n{depth}"
        inner = {**names, process.session: bound}
        return Restrict(bound, _canon(process.body, inner, pvars, depth + 1, pdepth), process.annotation)
    if isinstance(process, Def):
        proc_name = f"_X{pdepth}"
        inner_pvars = {**pvars, process.name: proc_name}
        params = tuple(f"_n{depth + i}" for i in range(len(process.params)))
        inner = {**names, **dict(zip(process.params, params))}
        body = _canon(process.body, inner, inner_pvars, depth + len(params), pdepth + 1)
        scope = _canon(process.scope, names, inner_pvars, depth, pdepth + 1)
        return Def(proc_name, params, body, scope)
    if isinstance(process, Call):
        return Call(pvars.get(process.name, process.name), tuple(_term(a, names) for a in process.args))
    raise TypeError(f"Неизвестный узел процесса: {process!r}")


def alpha_canonical(process):
    """Канонический представитель класса альфа-эквивалентности"""
    return _canon(process, {}, {}, 0, 0)


def struct_equal(left, right):
    """True, если процессы совпадают с точностью до переименования связанных имён"""
    return alpha_canonical(left) == alpha_canonical(right)


def _term_form(term):
    if isinstance(term, SessionRole):
        return ("role", term.session, term.role)
    if isinstance(term, Var):
        return ("var", term.name)
    if isinstance(term, SessionName):
        return ("session", term.name)
    return (type(term).__name__.lower(), term.value)


def structural_form(process):
    """
    Вложенные кортежи, однозначно описывающие процесс

    В отличие от текстовой формы различает Var и SessionName с одинаковым
    именем.
    """
    if isinstance(process, Nil):
        return ("nil",)
    if isinstance(process, Par):
        return ("par", structural_form(process.left), structural_form(process.right))
    if isinstance(process, Select):
        return ("select", _term_form(process.chan), process.partner, tuple(
            (b.prob.numerator, b.prob.denominator, b.label, _term_form(b.payload), structural_form(b.cont))
            for b in process.branches
        ))
    if isinstance(process, Branch):
        return ("branch", _term_form(process.chan), process.partner, tuple(
            (a.label, a.binder, structural_form(a.cont)) for a in process.branches
        ))
    if isinstance(process, Restrict):
        annotation = None if process.annotation is None else repr(process.annotation)
        return ("new", process.session, annotation, structural_form(process.body))
    if isinstance(process, Def):
        return ("def", process.name, process.params, structural_form(process.body),
                structural_form(process.scope))
    if isinstance(process, Call):
        return ("call", process.name, tuple(_term_form(a) for a in process.args))
    raise TypeError(f"Неизвестный узел процесса: {process!r}")

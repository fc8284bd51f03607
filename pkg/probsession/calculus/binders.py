"""
Связывание имён: свободные каналы/переменные, подстановка, переименование

Правила связывания:
- new s . P связывает s в P;
- l(x). P в ветвлении связывает x в P;
- def X(x~) = P in Q связывает x~ в P, а X - в P и в Q.

Имена сессий и переменных образуют одно пространство имён, процессные
переменные - отдельное.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet

from ..errors import ArityMismatch, IllFormedSubstitution
from .process import (
    Branch, BranchArm, Call, CHANNEL_TYPES, Def, Nil, Par, Restrict,
    Select, SelectBranch, SessionName, SessionRole, Var,
)


@dataclass(frozen=True)
class BinderReport:
    """fc, fv, fpv и dpv одного терма"""
    free_channels: FrozenSet[object]
    free_vars: FrozenSet[str]
    free_proc_vars: FrozenSet[str]
    declared_proc_vars: FrozenSet[str]


@dataclass(frozen=True)
class IncompleteSelect:
    """Выбор, вероятности ветвей которого не дают в сумме 1"""
    chan: object
    partner: str
    total: Fraction

    def __str__(self):
        return f"{self.chan}[{self.partner}] (сумма {self.total})"


@dataclass(frozen=True)
class _Rename:
    """Замена имени с сохранением вида вхождения (переменная, сессия, канал)"""
    name: str


# ---------------------------------------------------------------------------
# Свободные имена
# ---------------------------------------------------------------------------

def term_names(term):
    """Имена, входящие в значение или канал"""
    if isinstance(term, (Var, SessionName)):
        return {term.name}
    if isinstance(term, SessionRole):
        return {term.session}
    return set()


def free_names(process):
    """Множество свободных имён (сессии и переменные)"""
    if isinstance(process, Nil):
        return set()
    if isinstance(process, Par):
        return free_names(process.left) | free_names(process.right)
    if isinstance(process, Select):
        names = term_names(process.chan)
        for branch in process.branches:
            names |= term_names(branch.payload) | free_names(branch.cont)
        return names
    if isinstance(process, Branch):
        names = term_names(process.chan)
        for arm in process.branches:
            names |= free_names(arm.cont) - {arm.binder}
        return names
    if isinstance(process, Restrict):
        return free_names(process.body) - {process.session}
    if isinstance(process, Def):
        return (free_names(process.body) - set(process.params)) | free_names(process.scope)
    if isinstance(process, Call):
        names = set()
        for arg in process.args:
            names |= term_names(arg)
        return names
    raise TypeError(f"Неизвестный узел процесса: {process!r}")


def free_channels(process):
    """fc(P): свободные каналы в позициях субъекта и аргументов вызова"""
    if isinstance(process, Nil):
        return set()
    if isinstance(process, Par):
        return free_channels(process.left) | free_channels(process.right)
    if isinstance(process, Select):
        result = {process.chan}
        for branch in process.branches:
            result |= free_channels(branch.cont)
        return result
    if isinstance(process, Branch):
        result = {process.chan}
        for arm in process.branches:
            result |= {c for c in free_channels(arm.cont) if _channel_name(c) != arm.binder}
        return result
    if isinstance(process, Restrict):
        return {c for c in free_channels(process.body) if _channel_name(c) != process.session}
    if isinstance(process, Def):
        inner = {c for c in free_channels(process.body) if _channel_name(c) not in process.params}
        return inner | free_channels(process.scope)
    if isinstance(process, Call):
        return {arg for arg in process.args if isinstance(arg, CHANNEL_TYPES)}
    raise TypeError(f"Неизвестный узел процесса: {process!r}")


def _channel_name(channel):
    return channel.name if isinstance(channel, Var) else channel.session


def free_proc_vars(process):
    """fpv(P)"""
    if isinstance(process, Nil):
        return set()
    if isinstance(process, Par):
        return free_proc_vars(process.left) | free_proc_vars(process.right)
    if isinstance(process, Select):
        return set().union(*(free_proc_vars(b.cont) for b in process.branches))
    if isinstance(process, Branch):
        return set().union(*(free_proc_vars(a.cont) for a in process.branches))
    if isinstance(process, Restrict):
        return free_proc_vars(process.body)
    if isinstance(process, Def):
        return (free_proc_vars(process.body) | free_proc_vars(process.scope)) - {process.name}
    if isinstance(process, Call):
        return {process.name}
    raise TypeError(f"Неизвестный узел процесса: {process!r}")


def declared_proc_vars(process):
    """dpv(P): все процессные переменные, объявленные где-либо в P"""
    if isinstance(process, (Nil, Call)):
        return set()
    if isinstance(process, Par):
        return declared_proc_vars(process.left) | declared_proc_vars(process.right)
    if isinstance(process, Select):
        return set().union(*(declared_proc_vars(b.cont) for b in process.branches))
    if isinstance(process, Branch):
        return set().union(*(declared_proc_vars(a.cont) for a in process.branches))
    if isinstance(process, Restrict):
        return declared_proc_vars(process.body)
    if isinstance(process, Def):
        return {process.name} | declared_proc_vars(process.body) | declared_proc_vars(process.scope)
    raise TypeError(f"Неизвестный узел процесса: {process!r}")


def binder_report(process):
    """
    Сводка связывания для процесса

    Returns:
        BinderReport: fc, fv, fpv, dpv
    """
    return BinderReport(
        free_channels=frozenset(free_channels(process)),
        free_vars=frozenset(free_names(process)),
        free_proc_vars=frozenset(free_proc_vars(process)),
        declared_proc_vars=frozenset(declared_proc_vars(process)),
    )


def fresh_name(base, avoid):
    """Имя вида base_N, не входящее в avoid"""
    index = 1
    while f"{base}_{index}" in avoid:
        index += 1
    return f"{base}_{index}"


# ---------------------------------------------------------------------------
# Подстановка
# ---------------------------------------------------------------------------

def _replacement_names(subst):
    names = set()
    for value in subst.values():
        if isinstance(value, _Rename):
            names.add(value.name)
        else:
            names |= term_names(value)
    return names


def _subst_term(term, subst):
    if isinstance(term, Var) and term.name in subst:
        repl = subst[term.name]
        return Var(repl.name) if isinstance(repl, _Rename) else repl
    if isinstance(term, SessionName) and term.name in subst:
        repl = subst[term.name]
        return SessionName(repl.name) if isinstance(repl, _Rename) else repl
    if isinstance(term, SessionRole) and term.session in subst:
        repl = subst[term.session]
        if isinstance(repl, (_Rename, Var, SessionName)):
            return SessionRole(repl.name, term.role)
        raise IllFormedSubstitution(term.session, repl)
    return term


def _subst_channel(channel, subst):
    result = _subst_term(channel, subst)
    if not isinstance(result, CHANNEL_TYPES):
        raise IllFormedSubstitution(_channel_name(channel), result)
    return result


def _enter_binder(name, body_names, subst):
    """
    Подготавливает подстановку к проходу под связыватель name

    Returns:
        tuple: (новое имя связывателя, подстановка для тела)
    """
    inner = {k: v for k, v in subst.items() if k != name}
    inner = {k: v for k, v in inner.items() if k in body_names}
    if not inner:
        return name, inner
    if name in _replacement_names(inner):
        avoid = body_names | _replacement_names(inner) | set(inner)
        new_name = fresh_name(name, avoid)
        inner[name] = _Rename(new_name)
        return new_name, inner
    return name, inner


def _substitute(process, subst):
    if not subst or isinstance(process, Nil):
        return process
    if isinstance(process, Par):
        return Par(_substitute(process.left, subst), _substitute(process.right, subst))
    if isinstance(process, Select):
        return Select(
            _subst_channel(process.chan, subst),
            process.partner,
            tuple(
                SelectBranch(b.prob, b.label, _subst_term(b.payload, subst), _substitute(b.cont, subst))
                for b in process.branches
            ),
        )
    if isinstance(process, Branch):
        arms = []
        for arm in process.branches:
            binder, inner = _enter_binder(arm.binder, free_names(arm.cont), subst)
            arms.append(BranchArm(arm.label, binder, _substitute(arm.cont, inner)))
        return Branch(_subst_channel(process.chan, subst), process.partner, tuple(arms))
    if isinstance(process, Restrict):
        session, inner = _enter_binder(process.session, free_names(process.body), subst)
        return Restrict(session, _substitute(process.body, inner), process.annotation)
    if isinstance(process, Def):
        body_subst = {k: v for k, v in subst.items() if k not in process.params}
        params = list(process.params)
        body_names = free_names(process.body)
        body_subst = {k: v for k, v in body_subst.items() if k in body_names}
        clash = _replacement_names(body_subst)
        for index, param in enumerate(params):
            if param in clash:
                avoid = body_names | clash | set(body_subst) | set(params)
                new_param = fresh_name(param, avoid)
                params[index] = new_param
                body_subst[param] = _Rename(new_param)
        return Def(process.name, tuple(params), _substitute(process.body, body_subst),
                   _substitute(process.scope, subst))
    if isinstance(process, Call):
        return Call(process.name, tuple(_subst_term(arg, subst) for arg in process.args))
    raise TypeError(f"Неизвестный узел процесса: {process!r}")


def substitute(process, subst):
    """
    Одновременная подстановка значений/каналов вместо свободных имён

    Связанные вхождения не затрагиваются; связыватели, которые захватили бы
    подставляемые имена, переименовываются.

    Args:
        process (Process): Исходный процесс
        subst (dict): Имя -> значение или канал

    Returns:
        Process: Процесс после подстановки

    Raises:
        IllFormedSubstitution: Если имя сессии в s[r] заменяется не именем
    """
    return _substitute(process, dict(subst))


def rename_names(process, mapping):
    """Переименование свободных имён без изменения вида вхождений"""
    return _substitute(process, {old: _Rename(new) for old, new in mapping.items() if old != new})


def instantiate(name, params, args, body):
    """
    Тело определения с фактическими параметрами: P{v~/x~}

    Raises:
        ArityMismatch: Если |v~| != |x~|
    """
    if len(params) != len(args):
        raise ArityMismatch(name, len(params), len(args))
    return substitute(body, dict(zip(params, args)))


def rename_proc_vars(process, mapping):
    """Переименование свободных процессных переменных с учётом связывания"""
    mapping = {old: new for old, new in mapping.items() if old != new}
    if not mapping or isinstance(process, Nil):
        return process
    if isinstance(process, Call):
        return Call(mapping.get(process.name, process.name), process.args)
    if isinstance(process, Par):
        return Par(rename_proc_vars(process.left, mapping), rename_proc_vars(process.right, mapping))
    if isinstance(process, Select):
        return Select(process.chan, process.partner, tuple(
            SelectBranch(b.prob, b.label, b.payload, rename_proc_vars(b.cont, mapping))
            for b in process.branches
        ))
    if isinstance(process, Branch):
        return Branch(process.chan, process.partner, tuple(
            BranchArm(a.label, a.binder, rename_proc_vars(a.cont, mapping)) for a in process.branches
        ))
    if isinstance(process, Restrict):
        return Restrict(process.session, rename_proc_vars(process.body, mapping), process.annotation)
    if isinstance(process, Def):
        inner = {k: v for k, v in mapping.items() if k != process.name}
        name, body, scope = process.name, process.body, process.scope
        if name in inner.values():
            avoid = free_proc_vars(body) | free_proc_vars(scope) | set(inner) | set(inner.values())
            new_name = fresh_name(name, avoid)
            body = rename_proc_vars(body, {name: new_name})
            scope = rename_proc_vars(scope, {name: new_name})
            name = new_name
        return Def(name, process.params, rename_proc_vars(body, inner), rename_proc_vars(scope, inner))
    raise TypeError(f"Неизвестный узел процесса: {process!r}")


# ---------------------------------------------------------------------------
# Вероятностная полнота
# ---------------------------------------------------------------------------

def check_probability_complete(process):
    """
    Находит выборы, вероятности которых не складываются в 1

    Returns:
        list[IncompleteSelect]: Пустой список для вероятностно полного процесса
    """
    found = []

    def visit(p):
        if isinstance(p, Par):
            visit(p.left)
            visit(p.right)
        elif isinstance(p, Select):
            total = sum((b.prob for b in p.branches), Fraction(0))
            if total != 1:
                found.append(IncompleteSelect(p.chan, p.partner, total))
            for b in p.branches:
                visit(b.cont)
        elif isinstance(p, Branch):
            for a in p.branches:
                visit(a.cont)
        elif isinstance(p, Restrict):
            visit(p.body)
        elif isinstance(p, Def):
            visit(p.body)
            visit(p.scope)

    visit(process)
    return found


__all__ = [
    "BinderReport", "IncompleteSelect", "binder_report", "check_probability_complete",
    "declared_proc_vars", "free_channels", "free_names", "free_proc_vars", "fresh_name",
    "instantiate", "rename_names", "rename_proc_vars", "substitute",
    "term_names",
]

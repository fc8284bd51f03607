"""
Алгоритмическая проверка типов аннотированных процессов

Проверка синтаксически направлена: ожидаемые локальные типы берутся из
проекций аннотаций ограничений, поэтому унификация не нужна. Каждая ошибка
несёт путь вывода - последовательность имён правил от корня.

Режимы выбора:
- subset (по умолчанию): метки выбора J могут быть подмножеством меток
  типа I, если для каждой пропущенной метки 0 принадлежит её интервалу;
- strict: требуется J = I.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from ..calculus.binders import fresh_name, free_names, rename_names, rename_proc_vars
from ..calculus.process import (
    Bool, Branch, Call, Def, Int, Nil, Par, Restrict, Select, SessionName, SessionRole, Str, Var,
)
from ..calculus.binders import free_channels
from ..dynamics.congruence import normal_form
from ..errors import (
    CallArityMismatch, ChannelMismatch, IllFormedAnnotation, LabelSetMismatch, MissingAnnotation,
    NonDisjointTyping, ProbOutsideInterval, ProbSumNotOne, ProjectionMismatch,
    ProjectionUndefined, ResidualNotEndOnly, SortMismatch, UnboundVariable, UnknownProcVar,
    UntypedChannel,
)
from ..typesys.equality import types_equal
from ..typesys.projection import pid, project, well_formed
from ..typesys.types import BranchT, End, SelectT, Sort, unfold
from .environment import EMPTY_SORTING, EMPTY_TYPING, ProcSignature, Sorting, Typing

logger = logging.getLogger(__name__)

SUBSET = "subset"
STRICT = "strict"
MODES = (SUBSET, STRICT)


@dataclass
class PendingDef:
    """Определение, сигнатура которого выводится при первом вызове"""
    definition: Def
    gamma: Sorting
    visible: frozenset
    path: tuple
    signature: Optional[ProcSignature] = None


@dataclass(frozen=True)
class BranchJudgement:
    """Γ, x:S ⊢ P ▷ Δ для продолжения ветви (для проверки леммы о подстановке)"""
    gamma: Sorting
    binder: str
    sort: Sort
    cont: object
    delta: Typing


def literal_sorts(term):
    """Сорта, которые может иметь литерал"""
    if isinstance(term, Int):
        return (Sort.NAT, Sort.INT) if term.value >= 0 else (Sort.INT,)
    if isinstance(term, Bool):
        return (Sort.BOOL,)
    if isinstance(term, Str):
        return (Sort.STR,)
    return ()


def _subject_names(process):
    """Имена переменных-каналов в позиции субъекта выбора или ветвления"""
    names = set()

    def visit(p):
        if isinstance(p, (Select, Branch)):
            if isinstance(p.chan, Var):
                names.add(p.chan.name)
            for b in p.branches:
                visit(b.cont)
        elif isinstance(p, Par):
            visit(p.left)
            visit(p.right)
        elif isinstance(p, Restrict):
            visit(p.body)
        elif isinstance(p, Def):
            visit(p.body)
            visit(p.scope)

    visit(process)
    return names


def session_typing(session, global_type, path=()):
    """
    Типизация {s[r]: G|r} для всех ролей аннотации

    Raises:
        ProjectionMismatch: Если проекция на какую-либо роль не определена
    """
    entries = {}
    for role in sorted(pid(global_type)):
        try:
            entries[SessionRole(session, role)] = project(global_type, role)
        except ProjectionUndefined as error:
            raise ProjectionMismatch(role, str(error), path) from None
    return Typing(entries)


class TypeChecker:
    """
    Проверка Γ ⊢ P ▷ Δ

    Attributes:
        session_typings (dict): Имя сессии -> типизация, построенная по аннотации
        judgements (list[BranchJudgement]): Записанные суждения ветвей (record=True)
    """

    def __init__(self, mode=SUBSET, record=False):
        if mode not in MODES:
            raise ValueError(f"Неизвестный режим проверки: {mode}")
        self.mode = mode
        self.record = record
        self.session_typings = {}
        self.judgements = []
        self._pending = {}
        self._visible = frozenset()

    # --- значения ---
    def _check_value(self, gamma, term, expected, path):
        if isinstance(term, Var):
            sort = gamma.sort_of(term.name)
            if sort is None:
                raise UnboundVariable(term.name, expected, path)
            if sort != expected:
                raise SortMismatch(term, expected, path)
            return
        if expected not in literal_sorts(term):
            raise SortMismatch(term, expected, path)

    def _value_sort(self, gamma, term, path):
        if isinstance(term, Var):
            sort = gamma.sort_of(term.name)
            if sort is None:
                raise UntypedChannel(term, path)
            return sort
        sorts = literal_sorts(term)
        if not sorts:
            raise SortMismatch(term, "значение базового сорта", path)
        return sorts[0]

    def _lookup(self, delta, chan, path):
        if chan not in delta:
            raise UntypedChannel(chan, path)
        return unfold(delta[chan])

    # --- правила ---
    def check(self, gamma, process, delta, path=()):
        """
        Проверяет процесс против типизации

        Raises:
            TypeCheckError: Первое найденное нарушение с путём вывода
        """
        if isinstance(process, Nil):
            return self._check_end(delta, path + ("TEnd",))
        if isinstance(process, Par):
            return self._check_par(gamma, process, delta, path + ("TConc",))
        if isinstance(process, Select):
            return self._check_select(gamma, process, delta, path + ("TSelect",))
        if isinstance(process, Branch):
            return self._check_branch(gamma, process, delta, path + ("TBranch",))
        if isinstance(process, Restrict):
            return self._check_restrict(gamma, process, delta, path + (f"TRes:{process.session}",))
        if isinstance(process, Def):
            return self._check_def(gamma, process, delta, path + (f"TDef:{process.name}",))
        if isinstance(process, Call):
            return self._check_call(gamma, process, delta, path + (f"TCall:{process.name}",))
        raise TypeError(f"Неизвестный узел процесса: {process!r}")

    def _check_end(self, delta, path):
        if not delta.is_end_only():
            live = [c for c, t in delta.items() if not isinstance(unfold(t), End)]
            raise ResidualNotEndOnly(live, path)

    def _check_par(self, gamma, process, delta, path):
        left_used = free_channels(process.left)
        right_used = free_channels(process.right)
        left, right = {}, {}
        for channel in delta.channels():
            if channel in left_used and channel in right_used:
                raise NonDisjointTyping(channel, path)
            (right if channel in right_used else left)[channel] = delta[channel]
        self.check(gamma, process.left, Typing(left), path + ("left",))
        self.check(gamma, process.right, Typing(right), path + ("right",))

    def _check_select(self, gamma, process, delta, path):
        expected = self._lookup(delta, process.chan, path)
        if not isinstance(expected, SelectT) or expected.partner != process.partner:
            raise ChannelMismatch(process.chan, expected, path)
        found, offered = set(process.labels()), set(expected.labels())
        if not found <= offered or (self.mode == STRICT and found != offered):
            raise LabelSetMismatch(found, offered, path)

        total = sum((b.prob for b in process.branches), Fraction(0))
        if total != 1:
            raise ProbSumNotOne(f"{process.chan}[{process.partner}]", total, path)
        for branch in process.branches:
            interval = expected.branch(branch.label).delta
            if interval is not None and branch.prob not in interval:
                raise ProbOutsideInterval(branch.label, branch.prob, interval, path + (branch.label,))
        for omitted in sorted(offered - found):
            interval = expected.branch(omitted).delta
            if interval is not None and 0 not in interval:
                raise ProbOutsideInterval(omitted, Fraction(0), interval, path + (omitted,))

        for branch in process.branches:
            typed = expected.branch(branch.label)
            self._check_value(gamma, branch.payload, typed.sort, path + (branch.label, "TVal"))
            self.check(gamma, branch.cont, delta.with_entry(process.chan, typed.cont),
                       path + (branch.label,))

    def _check_branch(self, gamma, process, delta, path):
        expected = self._lookup(delta, process.chan, path)
        if not isinstance(expected, BranchT) or expected.partner != process.partner:
            raise ChannelMismatch(process.chan, expected, path)
        found, offered = set(process.labels()), set(expected.labels())
        if found != offered:
            raise LabelSetMismatch(found, offered, path)
        for arm in process.branches:
            typed = expected.branch(arm.label)
            inner_gamma = gamma.with_value(arm.binder, typed.sort)
            inner_delta = delta.with_entry(process.chan, typed.cont)
            self.check(inner_gamma, arm.cont, inner_delta, path + (arm.label,))
            if self.record:
                self.judgements.append(BranchJudgement(
                    self._snapshot(gamma), arm.binder, typed.sort, arm.cont, inner_delta
                ))

    def _check_restrict(self, gamma, process, delta, path):
        if process.annotation is None:
            raise MissingAnnotation(process.session, path)
        session, body = process.session, process.body
        taken = set(delta.sessions()) | set(self.session_typings)
        if session in taken:
            new_session = fresh_name(session, taken | free_names(body))
            body = rename_names(body, {session: new_session})
            session = new_session
        local = session_typing(session, process.annotation, path)
        self.check(gamma, body, delta.compose(local), path)

        report = well_formed(process.annotation)
        if not report.ok:
            logger.warning("Аннотация сессии %s содержит недостижимые наборы интервалов: %s",
                           session, [i.location() for i in report.bad_interval_sets])
            raise IllFormedAnnotation(session, report, path)
        self.session_typings[session] = local

    def _check_def(self, gamma, process, delta, path):
        name, body, scope = process.name, process.body, process.scope
        if name in self._pending or gamma.signature(name) is not None:
            new_name = fresh_name(name, set(self._pending) | set(gamma.procs))
            body = rename_proc_vars(body, {name: new_name})
            scope = rename_proc_vars(scope, {name: new_name})
            name = new_name
        definition = Def(name, process.params, body, scope)

        outer_visible = self._visible
        self._visible = outer_visible | {name}
        entry = PendingDef(definition, gamma, self._visible, path)
        self._pending[name] = entry
        try:
            self.check(gamma, scope, delta, path + ("scope",))
        finally:
            self._visible = outer_visible
        if entry.signature is None:
            logger.debug("Определение %s не вызывается и не проверяется", name)

    def _infer_signature(self, gamma, entry, call, delta, path):
        definition = entry.definition
        if len(call.args) != len(definition.params):
            raise CallArityMismatch(call.name, len(definition.params), len(call.args), path)
        subjects = _subject_names(definition.body)
        params = []
        for param, arg in zip(definition.params, call.args):
            if param in subjects or isinstance(arg, SessionRole) or arg in delta:
                if arg not in delta:
                    raise UntypedChannel(arg, path)
                params.append(delta[arg])
            else:
                params.append(self._value_sort(gamma, arg, path))
        entry.signature = ProcSignature(tuple(params))
        logger.debug("Сигнатура %s выведена при вызове: %s", call.name, entry.signature)

        body_gamma, body_delta = entry.gamma, {}
        for param, expected in zip(definition.params, entry.signature.params):
            if isinstance(expected, Sort):
                body_gamma = body_gamma.with_value(param, expected)
            else:
                body_delta[Var(param)] = expected
        outer_visible = self._visible
        self._visible = entry.visible
        try:
            self.check(body_gamma, definition.body, Typing(body_delta), entry.path + ("body",))
        finally:
            self._visible = outer_visible

    def _signature(self, gamma, call, delta, path):
        if call.name in self._visible:
            entry = self._pending[call.name]
            if entry.signature is None:
                self._infer_signature(gamma, entry, call, delta, path)
            return entry.signature
        signature = gamma.signature(call.name)
        if signature is None:
            raise UnknownProcVar(call.name, path)
        return signature

    def _check_call(self, gamma, call, delta, path):
        signature = self._signature(gamma, call, delta, path)
        if len(call.args) != len(signature.params):
            raise CallArityMismatch(call.name, len(signature.params), len(call.args), path)
        used = []
        for index, (arg, expected) in enumerate(zip(call.args, signature.params)):
            if isinstance(expected, Sort):
                self._check_value(gamma, arg, expected, path + (f"arg{index}",))
                continue
            if arg not in delta:
                raise UntypedChannel(arg, path)
            if not types_equal(delta[arg], expected):
                raise ChannelMismatch(arg, expected, path)
            used.append(arg)
        residue = delta.without(*used)
        if not residue.is_end_only():
            live = [c for c, t in residue.items() if not isinstance(unfold(t), End)]
            raise ResidualNotEndOnly(live, path)

    def _snapshot(self, gamma):
        """Γ с уже выведенными сигнатурами видимых определений"""
        for name in self._visible:
            signature = self._pending[name].signature
            if signature is not None:
                gamma = gamma.with_proc(name, signature)
        return gamma


# ---------------------------------------------------------------------------
# Точки входа
# ---------------------------------------------------------------------------

def check_process(gamma, process, delta, mode=SUBSET):
    """
    Проверяет Γ ⊢ P ▷ Δ для заданной типизации

    Returns:
        Typing: Та же типизация Δ

    Raises:
        TypeCheckError: При нарушении правил типизации
    """
    TypeChecker(mode).check(gamma or EMPTY_SORTING, process, delta)
    return delta


def type_check(gamma, process, mode=SUBSET):
    """
    Проверяет замкнутый аннотированный процесс

    Args:
        gamma (Sorting): Сортировка (None - пустая)
        process (Process): Процесс, все ограничения которого аннотированы
        mode (str): "subset" или "strict"

    Returns:
        Typing: Пустая типизация

    Raises:
        TypeCheckError: При нарушении правил типизации
    """
    TypeChecker(mode).check(gamma or EMPTY_SORTING, process, EMPTY_TYPING)
    return EMPTY_TYPING


def open_restrictions(process):
    """
    Снимает аннотированные ограничения верхнего уровня нормальной формы

    Returns:
        tuple[Process, Typing]: Тело и типизация открытых сессий

    Raises:
        ProjectionMismatch: Если проекция аннотации не определена
    """
    body = normal_form(process)
    delta = EMPTY_TYPING
    while isinstance(body, Restrict) and body.annotation is not None:
        delta = delta.compose(session_typing(body.session, body.annotation))
        body = body.body
    return body, delta


def reannotate(process, session, global_type):
    """Процесс, в котором аннотация ограничения session заменена на global_type"""
    if isinstance(process, Restrict):
        if process.session == session:
            return Restrict(session, process.body, global_type)
        return Restrict(process.session, reannotate(process.body, session, global_type),
                        process.annotation)
    if isinstance(process, Par):
        return Par(reannotate(process.left, session, global_type),
                   reannotate(process.right, session, global_type))
    if isinstance(process, Def):
        return Def(process.name, process.params, reannotate(process.body, session, global_type),
                   reannotate(process.scope, session, global_type))
    return process

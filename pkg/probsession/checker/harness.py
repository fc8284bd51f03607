"""
Исполняемые проверки метатеоретических свойств системы типов

Каждая проверка возвращает HarnessReport: статус, число проверенных случаев
и список нарушений со свидетельскими трассами меток переходов.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import List, Tuple

from ..calculus.binders import free_channels, free_names, free_proc_vars, fresh_name, substitute
from ..calculus.process import NIL, Bool, Def, Int, Par, Restrict, SessionRole, Str
from ..dynamics.congruence import axiom_rewrites, decompose, normal_form, state_key
from ..dynamics.semantics import enabled_steps, find_redexes
from ..errors import IntersectionUndefined, TypeCheckError
from ..typesys.equality import erased_equal
from ..typesys.refine import intersect_global
from ..typesys.types import END, Sort
from .environment import EMPTY_SORTING, ProcSignature, Typing
from .reduction import type_step
from .typecheck import (
    SUBSET, TypeChecker, check_process, open_restrictions, reannotate, type_check,
)

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"
NOT_APPLICABLE = "not-applicable"

NIL_KEY = state_key(NIL)

CANONICAL_VALUES = {
    Sort.NAT: Int(1),
    Sort.INT: Int(-1),
    Sort.BOOL: Bool(True),
    Sort.STR: Str("v"),
}


@dataclass(frozen=True)
class Violation:
    """Нарушение свойства со свидетельской трассой"""
    kind: str
    message: str
    trace: Tuple[object, ...] = ()
    state: str = ""

    def trace_text(self):
        return " ".join(str(label) for label in self.trace) or "<начало>"


@dataclass
class HarnessReport:
    """
    Отчёт исполняемой проверки

    Attributes:
        name (str): Имя проверки
        status (str): pass | fail | inconclusive | not-applicable
        checked (int): Число проверенных случаев (переходов, состояний, переписываний)
        violations (list[Violation]): Найденные нарушения
        reason (str): Пояснение для inconclusive / not-applicable
    """
    name: str
    status: str = PASS
    checked: int = 0
    violations: List[Violation] = field(default_factory=list)
    reason: str = ""
    details: dict = field(default_factory=dict)

    @property
    def ok(self):
        return self.status == PASS

    def add(self, violation):
        self.violations.append(violation)
        self.status = FAIL


# ---------------------------------------------------------------------------
# Сохранение типов при редукции
# ---------------------------------------------------------------------------

def _candidate_typings(typing, step, redex_count):
    yield typing
    scaled = step.prob * redex_count
    for candidate in type_step(typing, step.label):
        if candidate.delta is None or scaled in candidate.delta:
            yield candidate.target


def verify_subject_reduction(gamma, process, depth, mode=SUBSET):
    """
    Проверяет сохранение типов при редукции до заданной глубины

    Для каждого перехода P -(tl)->_p P' ищется Δ' = Δ или Δ =(tl)=>_δ Δ'
    с p * next_proc(P) ∈ δ, такая что P' проверяется против Δ'.

    Raises:
        TypeCheckError: Если не проверяется сам исходный процесс
    """
    gamma = gamma or EMPTY_SORTING
    report = HarnessReport("subject-reduction")
    body, typing = open_restrictions(process)
    check_process(gamma, body, typing, mode)

    frontier = deque([(body, typing, ())])
    visited = {(state_key(body), str(typing))}
    for _ in range(depth):
        next_frontier = deque()
        while frontier:
            state, typing, trace = frontier.popleft()
            redex_count = len(find_redexes(state).redexes)
            for step in enabled_steps(state, merge=False):
                report.checked += 1
                target, exposed = open_restrictions(step.target)
                step_trace = trace + (step.label,)
                accepted, last_error = None, None
                for candidate in _candidate_typings(typing, step, redex_count):
                    try:
                        candidate = candidate.compose(exposed)
                        check_process(gamma, target, candidate, mode)
                    except TypeCheckError as error:
                        last_error = error
                        continue
                    accepted = candidate
                    break
                if accepted is None:
                    report.add(Violation("subject-reduction", str(last_error), step_trace, str(step.target)))
                    continue
                seen = (state_key(target), str(accepted))
                if seen not in visited:
                    visited.add(seen)
                    next_frontier.append((target, accepted, step_trace))
        frontier = next_frontier
    logger.info("Сохранение типов: проверено переходов %d, нарушений %d",
                report.checked, len(report.violations))
    return report


# ---------------------------------------------------------------------------
# Отсутствие тупиков
# ---------------------------------------------------------------------------

@dataclass
class Exploration:
    """Результат ограниченного обхода пространства состояний"""
    states: int = 0
    terminal: int = 0
    stuck: List[Tuple[object, tuple]] = field(default_factory=list)
    truncated: bool = False


def explore_stuck_states(process, bound):
    """
    Обход состояний до bound шагов без проверки типов

    Returns:
        Exploration: Число состояний, завершённых состояний, застрявшие
            состояния, не конгруэнтные 0 (с трассами), и признак обрыва по границе
    """
    result = Exploration()
    start = normal_form(process)
    visited = {state_key(start)}
    frontier = [(start, ())]
    for _ in range(bound):
        next_frontier = []
        for state, trace in frontier:
            steps = enabled_steps(state)
            if not steps:
                result.terminal += 1
                if state_key(state) != NIL_KEY:
                    result.stuck.append((state, trace))
                continue
            for step in steps:
                if step.key not in visited:
                    visited.add(step.key)
                    next_frontier.append((step.target, trace + (step.label,)))
        frontier = next_frontier
        if not frontier:
            break
    for state, trace in frontier:
        if enabled_steps(state):
            result.truncated = True
        else:
            result.terminal += 1
            if state_key(state) != NIL_KEY:
                result.stuck.append((state, trace))
    result.states = len(visited)
    return result


def _shape_problem(process):
    """Причина, по которой процесс не имеет вида (νs:G) |_i P_i, или None"""
    layers = decompose(normal_form(process))
    if len(layers.restricts) != 1:
        return f"ожидалась ровно одна сессия, найдено {len(layers.restricts)}"
    session, annotation = layers.restricts[0]
    if annotation is None:
        return f"сессия {session} не аннотирована"
    roles = []
    for atom in layers.atoms:
        names = free_names(atom)
        channels = _atom_channels(atom)
        if names - {session} or len({c.role for c in channels}) != 1:
            return f"компонента {atom} использует не один канал s[r]"
        roles.append(channels[0].role)
    if len(roles) != len(set(roles)):
        return "две компоненты используют одну роль"
    return None


def _atom_channels(atom):
    return [c for c in free_channels(atom) if isinstance(c, SessionRole)]


def check_deadlock_freedom(process, bound, mode=SUBSET):
    """
    Проверяет, что каждое достижимое застрявшее состояние конгруэнтно 0

    Применимо к типизируемым процессам вида (νs:G) |_i P_i, где P_i
    взаимодействует только через s[r_i].

    Returns:
        HarnessReport: pass / fail / inconclusive / not-applicable
    """
    report = HarnessReport("deadlock-freedom")
    if state_key(process) == NIL_KEY:
        report.details["terminal"] = 1
        return report
    try:
        type_check(EMPTY_SORTING, process, mode)
    except TypeCheckError as error:
        report.status, report.reason = NOT_APPLICABLE, f"процесс не типизируем: {error}"
        return report
    problem = _shape_problem(process)
    if problem:
        report.status, report.reason = NOT_APPLICABLE, problem
        return report

    exploration = explore_stuck_states(process, bound)
    report.checked = exploration.states
    report.details["terminal"] = exploration.terminal
    for state, trace in exploration.stuck:
        report.add(Violation("deadlock", "застрявшее состояние не конгруэнтно 0", trace, str(state)))
    if report.ok and exploration.truncated:
        report.status = INCONCLUSIVE
        report.reason = f"достигнута граница {bound} при незавершённых состояниях"
    return report


# ---------------------------------------------------------------------------
# Леммы: ослабление, усиление, подстановка
# ---------------------------------------------------------------------------

def _expect_accepted(report, kind, gamma, process, typing, mode, label=""):
    report.checked += 1
    try:
        check_process(gamma, process, typing, mode)
    except TypeCheckError as error:
        report.add(Violation(kind, f"{label}{error}"))


def verify_lemma_properties(corpus, mode=SUBSET):
    """
    Проверяет ослабление типизации, ослабление и усиление сортировки
    и подстановку на типизируемых процессах

    Args:
        corpus: Пары (имя, процесс)
    """
    report = HarnessReport("lemmas")
    for name, process in corpus:
        body, typing = open_restrictions(process)
        checker = TypeChecker(mode, record=True)
        checker.check(EMPTY_SORTING, body, typing)

        sessions = set(typing.sessions()) | free_names(body)
        weak = typing.with_entry(SessionRole(fresh_name("w", sessions), "rW"), END)
        _expect_accepted(report, "type-weakening", EMPTY_SORTING, body, weak, mode, f"{name}: ")

        unused = fresh_name("X", free_proc_vars(body) | set(checker.session_typings))
        extended = EMPTY_SORTING.with_proc(unused, ProcSignature((Sort.NAT,)))
        _expect_accepted(report, "sort-weakening", extended, body, typing, mode, f"{name}: ")
        _expect_accepted(report, "sort-strengthening", extended.without_proc(unused), body, typing,
                         mode, f"{name}: ")

        for judgement in checker.judgements:
            value = CANONICAL_VALUES[judgement.sort]
            substituted = substitute(judgement.cont, {judgement.binder: value})
            _expect_accepted(report, "substitution", judgement.gamma, substituted, judgement.delta,
                             mode, f"{name}/{judgement.binder}:={value}: ")
    return report


# ---------------------------------------------------------------------------
# Сохранение типов при конгруэнтности и пересечение
# ---------------------------------------------------------------------------

def _introductions(process, typing):
    session = fresh_name("z", free_names(process) | set(typing.sessions()))
    proc = fresh_name("Z", free_proc_vars(process))
    yield "new-nil", Par(process, Restrict(session, NIL, END))
    yield "def-nil", Par(process, Def(proc, (), NIL, NIL))


def verify_equivalence_preservation(gamma, process, mode=SUBSET):
    """
    Проверяет, что каждое однократное применение аксиомы конгруэнтности
    сохраняет типизацию (замкнутый процесс и его открытое тело)

    Raises:
        TypeCheckError: Если не проверяется сам исходный процесс
    """
    gamma = gamma or EMPTY_SORTING
    report = HarnessReport("equivalence-preservation")
    type_check(gamma, process, mode)
    body, typing = open_restrictions(process)
    check_process(gamma, body, typing, mode)

    cases = [(axiom, rewritten, Typing()) for axiom, rewritten in axiom_rewrites(process)]
    cases += [(axiom, rewritten, Typing()) for axiom, rewritten in _introductions(process, Typing())]
    cases += [(axiom, rewritten, typing) for axiom, rewritten in axiom_rewrites(body)]
    cases += [(axiom, rewritten, typing) for axiom, rewritten in _introductions(body, typing)]
    for axiom, rewritten, expected in cases:
        report.checked += 1
        try:
            check_process(gamma, rewritten, expected, mode)
        except TypeCheckError as error:
            report.add(Violation(axiom, f"{rewritten}: {error}"))
    return report


def verify_intersection(gamma, process, session, variants, mode=SUBSET):
    """
    Проверяет, что процесс, типизируемый против двух вариантов аннотации
    с одинаковой стёртой формой, типизируется против их пересечения

    Args:
        session (str): Имя ограничения, аннотация которого заменяется
        variants (list[GlobalType]): Варианты аннотации
    """
    gamma = gamma or EMPTY_SORTING
    report = HarnessReport("intersection")
    accepted = []
    for variant in variants:
        try:
            type_check(gamma, reannotate(process, session, variant), mode)
        except TypeCheckError as error:
            logger.debug("Вариант аннотации отвергнут: %s", error)
            continue
        accepted.append(variant)
    report.details["accepted_variants"] = len(accepted)

    for i, left in enumerate(accepted):
        for right in accepted[i + 1:]:
            if not erased_equal(left, right):
                continue
            try:
                meet = intersect_global(left, right)
            except IntersectionUndefined as error:
                report.add(Violation("intersection", f"пересечение не определено: {error}"))
                continue
            report.checked += 1
            try:
                type_check(gamma, reannotate(process, session, meet), mode)
            except TypeCheckError as error:
                report.add(Violation("intersection", f"{meet}: {error}"))
    if report.ok and report.checked == 0:
        report.status = INCONCLUSIVE
        report.reason = "нет пары принятых вариантов с одинаковой стёртой формой"
    return report

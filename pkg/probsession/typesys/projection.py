"""
Проекция глобальных типов на роли и корректность глобальных типов
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Tuple

from ..errors import NonMergeableBranches, ProjectionUndefined
from .equality import types_equal
from .intervals import classify_interval_set
from .types import END, BranchT, End, Interaction, LBranch, LSelect, Rec, SelectT, TVar

logger = logging.getLogger(__name__)


def pid(global_type):
    """Множество ролей, участвующих во взаимодействиях типа"""
    if isinstance(global_type, Interaction):
        roles = {global_type.sender, global_type.receiver}
        for branch in global_type.branches:
            roles |= pid(branch.cont)
        return roles
    if isinstance(global_type, Rec):
        return pid(global_type.body)
    return set()


def project(global_type, role):
    """
    Проекция G на роль r

    Отправитель получает выбор, получатель - ветвление; для остальных ролей
    проекции всех ветвей должны совпадать (с точностью до развёртки рекурсии).

    Returns:
        LocalType: Локальный тип роли

    Raises:
        NonMergeableBranches: Если ветви дают разные проекции для роли
    """
    if isinstance(global_type, (End, TVar)):
        return global_type
    if isinstance(global_type, Rec):
        body = project(global_type.body, role)
        if isinstance(body, End) or body == TVar(global_type.var):
            return END
        return Rec(global_type.var, body)
    if isinstance(global_type, Interaction):
        if role == global_type.sender:
            return SelectT(global_type.receiver, tuple(
                LSelect(b.delta, b.label, b.sort, project(b.cont, role)) for b in global_type.branches
            ))
        if role == global_type.receiver:
            return BranchT(global_type.sender, tuple(
                LBranch(b.label, b.sort, project(b.cont, role)) for b in global_type.branches
            ))
        projections = [project(b.cont, role) for b in global_type.branches]
        first = projections[0]
        for other in projections[1:]:
            if not types_equal(first, other):
                raise NonMergeableBranches(role)
        return first
    raise TypeError(f"Ожидался глобальный тип: {global_type!r}")


@dataclass(frozen=True)
class IntervalSetIssue:
    """Набор интервалов одного взаимодействия, не являющийся достижимым"""
    path: Tuple[str, ...]
    sender: str
    receiver: str
    deltas: Tuple[object, ...]
    proper: bool
    reachable: bool

    def location(self):
        return ".".join(self.path) if self.path else "<корень>"


@dataclass(frozen=True)
class WellFormednessReport:
    """
    Результат проверки корректности глобального типа

    Attributes:
        ok (bool): Все проекции определены и все наборы интервалов достижимы
        per_role (dict): Роль -> LocalType или ProjectionUndefined
        bad_interval_sets (tuple[IntervalSetIssue]): Недостижимые наборы
    """
    ok: bool
    per_role: Dict[str, object] = field(default_factory=dict)
    bad_interval_sets: Tuple[IntervalSetIssue, ...] = ()

    def undefined_roles(self):
        return sorted(r for r, t in self.per_role.items() if isinstance(t, ProjectionUndefined))


def interval_set_issues(global_type):
    """Все недостижимые наборы интервалов с путями меток от корня"""
    issues = []

    def visit(term, path):
        if isinstance(term, Rec):
            visit(term.body, path)
        elif isinstance(term, Interaction):
            deltas = tuple(term.deltas())
            verdict = classify_interval_set(deltas)
            if not verdict.reachable:
                issues.append(IntervalSetIssue(path, term.sender, term.receiver, deltas,
                                               verdict.proper, verdict.reachable))
            for branch in term.branches:
                visit(branch.cont, path + (branch.label,))

    visit(global_type, ())
    return issues


def well_formed(global_type):
    """
    Проверяет корректность глобального типа

    Returns:
        WellFormednessReport: Отчёт с проекциями и недостижимыми наборами
    """
    per_role = {}
    for role in sorted(pid(global_type)):
        try:
            per_role[role] = project(global_type, role)
        except ProjectionUndefined as error:
            logger.debug("проекция на %s не определена: %s", role, error)
            per_role[role] = error
    issues = tuple(interval_set_issues(global_type))
    defined = all(not isinstance(t, ProjectionUndefined) for t in per_role.values())
    return WellFormednessReport(ok=defined and not issues, per_role=per_role, bad_interval_sets=issues)

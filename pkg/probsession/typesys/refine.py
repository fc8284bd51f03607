"""
Стирание интервалов и пересечение типов с неточными вероятностями
"""

from ..calculus.prob import Interval
from ..errors import DomainMismatch, EmptyInterval, ShapeMismatch
from .equality import erased_equal
from .types import (
    BranchT, End, GBranch, Interaction, LBranch, LSelect, Rec, SelectT, TVar,
    substitute_type_var,
)


def _map_deltas(term, fn):
    if isinstance(term, (End, TVar)):
        return term
    if isinstance(term, Rec):
        return Rec(term.var, _map_deltas(term.body, fn))
    if isinstance(term, SelectT):
        return SelectT(term.partner, tuple(
            LSelect(fn(b.delta), b.label, b.sort, _map_deltas(b.cont, fn)) for b in term.branches
        ))
    if isinstance(term, BranchT):
        return BranchT(term.partner, tuple(
            LBranch(b.label, b.sort, _map_deltas(b.cont, fn)) for b in term.branches
        ))
    if isinstance(term, Interaction):
        return Interaction(term.sender, term.receiver, tuple(
            GBranch(fn(b.delta), b.label, b.sort, _map_deltas(b.cont, fn)) for b in term.branches
        ))
    raise TypeError(f"Ожидался тип: {term!r}")


def erase(local_type):
    """Удаляет интервалы из всех выборов локального типа"""
    head = local_type
    while isinstance(head, Rec):
        head = head.body
    if isinstance(head, Interaction):
        raise TypeError("erase применяется к локальным типам")
    return _map_deltas(local_type, lambda _delta: None)


def relax_intervals(term):
    """Заменяет каждый интервал на [0,1] (в глобальном или локальном типе)"""
    return _map_deltas(term, lambda _delta: Interval.full())


def _meet(left, right, label):
    if left is None:
        return right
    if right is None:
        return left
    result = left & right
    if result is None:
        raise EmptyInterval(label)
    return result


def _intersect(left, right):
    if isinstance(left, End) and isinstance(right, End):
        return left
    if isinstance(left, TVar) and isinstance(right, TVar) and left.name == right.name:
        return left
    if isinstance(left, Rec) and isinstance(right, Rec):
        body = right.body
        if right.var != left.var:
            body = substitute_type_var(body, right.var, TVar(left.var))
        return Rec(left.var, _intersect(left.body, body))
    if isinstance(left, SelectT) and isinstance(right, SelectT) and left.partner == right.partner:
        branches = []
        for branch in left.branches:
            other = right.branch(branch.label)
            if other is None or other.sort != branch.sort:
                raise ShapeMismatch(left, right)
            branches.append(LSelect(_meet(branch.delta, other.delta, branch.label), branch.label,
                                    branch.sort, _intersect(branch.cont, other.cont)))
        if len(branches) != len(right.branches):
            raise ShapeMismatch(left, right)
        return SelectT(left.partner, tuple(branches))
    if isinstance(left, BranchT) and isinstance(right, BranchT) and left.partner == right.partner:
        branches = []
        for branch in left.branches:
            other = right.branch(branch.label)
            if other is None or other.sort != branch.sort:
                raise ShapeMismatch(left, right)
            branches.append(LBranch(branch.label, branch.sort, _intersect(branch.cont, other.cont)))
        if len(branches) != len(right.branches):
            raise ShapeMismatch(left, right)
        return BranchT(left.partner, tuple(branches))
    if (isinstance(left, Interaction) and isinstance(right, Interaction)
            and (left.sender, left.receiver) == (right.sender, right.receiver)):
        by_label = {b.label: b for b in right.branches}
        if set(by_label) != {b.label for b in left.branches}:
            raise ShapeMismatch(left, right)
        branches = []
        for branch in left.branches:
            other = by_label[branch.label]
            if other.sort != branch.sort:
                raise ShapeMismatch(left, right)
            branches.append(GBranch(_meet(branch.delta, other.delta, branch.label), branch.label,
                                    branch.sort, _intersect(branch.cont, other.cont)))
        return Interaction(left.sender, left.receiver, tuple(branches))
    raise ShapeMismatch(left, right)


def intersect_local(left, right):
    """
    Пересечение двух локальных типов одной формы

    Интервалы выборов пересекаются поточечно, остальная структура должна
    совпадать.

    Args:
        left, right (LocalType): Типы с равными стёртыми формами

    Raises:
        ShapeMismatch: Если стёртые формы различаются
        EmptyInterval: Если пересечение интервалов какой-то метки пусто
    """
    if not erased_equal(left, right):
        raise ShapeMismatch(left, right)
    return _intersect(left, right)


def intersect_global(left, right):
    """Поточечное пересечение интервалов двух глобальных типов одной формы"""
    if not erased_equal(left, right):
        raise ShapeMismatch(left, right)
    return _intersect(left, right)


def intersect_typing(left, right):
    """
    Поточечное пересечение типизаций с одинаковыми областями определения

    Raises:
        DomainMismatch: Если множества каналов различаются
    """
    from ..checker.environment import Typing

    if set(left.channels()) != set(right.channels()):
        raise DomainMismatch(sorted(map(str, left.channels())), sorted(map(str, right.channels())))
    return Typing({channel: intersect_local(left[channel], right[channel])
                   for channel in left.channels()})

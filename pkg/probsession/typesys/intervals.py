"""Классификация наборов неточных вероятностей: собственные и достижимые"""

from fractions import Fraction
from typing import NamedTuple

from ..calculus.prob import Interval


class IntervalSetClass(NamedTuple):
    proper: bool
    reachable: bool


def is_proper(deltas):
    """sum(d1) <= 1 <= sum(d2)"""
    lower = sum((d.lower for d in deltas), Fraction(0))
    upper = sum((d.upper for d in deltas), Fraction(0))
    return lower <= 1 <= upper


def is_reachable(deltas):
    """
    Для каждого i: sum_{j!=i} d1_j + d2_i <= 1 <= sum_{j!=i} d2_j + d1_i

    То есть каждый конец каждого интервала достигается некоторым
    распределением, остальные компоненты которого лежат в своих интервалах.
    """
    lower = sum((d.lower for d in deltas), Fraction(0))
    upper = sum((d.upper for d in deltas), Fraction(0))
    for delta in deltas:
        if (lower - delta.lower) + delta.upper > 1:
            return False
        if (upper - delta.upper) + delta.lower < 1:
            return False
    return True


def classify_interval_set(deltas):
    """
    Классифицирует непустой набор интервалов

    Args:
        deltas (Sequence[Interval]): Интервалы ветвей одного выбора

    Returns:
        IntervalSetClass: (proper, reachable)
    """
    deltas = list(deltas)
    if not deltas:
        raise ValueError("Набор интервалов не может быть пустым")
    return IntervalSetClass(is_proper(deltas), is_reachable(deltas))


def tighten(deltas):
    """
    Наименьший достижимый набор с теми же распределениями

    Каждый конец сдвигается к значению, которое достигается при остальных
    компонентах в своих интервалах: d1_i' = max(d1_i, 1 - sum_{j!=i} d2_j),
    d2_i' = min(d2_i, 1 - sum_{j!=i} d1_j).

    Raises:
        ValueError: Если набор пуст или не является собственным
    """
    deltas = list(deltas)
    if not deltas or not is_proper(deltas):
        raise ValueError("Сужать можно только непустой собственный набор интервалов")
    lower = sum((d.lower for d in deltas), Fraction(0))
    upper = sum((d.upper for d in deltas), Fraction(0))
    return [
        Interval(max(d.lower, 1 - (upper - d.upper)), min(d.upper, 1 - (lower - d.lower)))
        for d in deltas
    ]

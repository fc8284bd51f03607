"""
Множества достижимости за k шагов и проверка суммы вероятностей

Reach_1(P) - непосредственные последователи P; Reach_k(P) - последователи
состояний Reach_{k-1}(P) вместе с застрявшими состояниями Reach_{k-1}(P),
которые переходят в Reach_k без изменений. Состояния - классы
конгруэнтности, массы вероятности точные.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from ..config import AnalysisConfig
from ..errors import ExplosionGuard
from .paths import StepCache, require_complete

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReachEntry:
    """
    Состояние множества достижимости

    Attributes:
        state (Process): Представитель класса (нормальная форма)
        mass (Fraction): Вероятность оказаться в классе
        absorbed (bool): Состояние застряло (переходов нет)
        key (str): Ключ класса
    """
    state: object
    mass: Fraction
    absorbed: bool
    key: str


class NotComputed:
    """Сумма не вычисляется: множество достижимости пусто"""

    def __str__(self):
        return "not computed"

    def __repr__(self):
        return "NOT_COMPUTED"


NOT_COMPUTED = NotComputed()


def reach_step(distribution, cache, config=None):
    """
    Один шаг композиции марковской цепи

    Args:
        distribution (dict): Ключ -> (состояние, масса)
        cache (StepCache): Кэш переходов

    Returns:
        dict: Новое распределение; застрявшие состояния переносятся как есть

    Raises:
        ExplosionGuard: Если число состояний превышает предел
    """
    config = config or AnalysisConfig.from_env()
    result = {}
    for key, (state, mass) in distribution.items():
        steps = cache.steps(state, key)
        if not steps:
            _accumulate(result, key, state, mass)
            continue
        for step in steps:
            _accumulate(result, step.key, step.target, mass * step.prob)
        if len(result) > config.explosion_cap:
            raise ExplosionGuard(config.explosion_cap)
    return result


def _accumulate(distribution, key, state, mass):
    if key in distribution:
        first, total = distribution[key]
        distribution[key] = (first, total + mass)
    else:
        distribution[key] = (state, mass)


def reach_distribution(process, k, config=None, cache=None):
    """Распределение Reach_k(P) в виде словаря ключ -> (состояние, масса)"""
    config = config or AnalysisConfig.from_env()
    cache = StepCache() if cache is None else cache
    require_complete(process)
    distribution = {}
    for step in cache.steps(process):
        _accumulate(distribution, step.key, step.target, step.prob)
    for _ in range(k - 1):
        if not distribution:
            break
        distribution = reach_step(distribution, cache, config)
    return distribution


def reach(process, k, config=None, cache=None):
    """
    Множество достижимости за k шагов с точными массами

    Args:
        process (Process): Вероятностно полный процесс
        k (int): Число шагов (k >= 1)

    Returns:
        list[ReachEntry]: Записи, упорядоченные по ключу состояния; пустой
            список, если P застрял сразу

    Raises:
        ExplosionGuard: Если число состояний превышает предел
    """
    if k < 1:
        raise ValueError(f"k должно быть положительным: {k}")
    cache = StepCache() if cache is None else cache
    distribution = reach_distribution(process, k, config, cache)
    entries = [
        ReachEntry(state, mass, not cache.steps(state, key), key)
        for key, (state, mass) in sorted(distribution.items())
    ]
    logger.info("Reach_%d: %d состояний, попаданий в кэш %d", k, len(entries), cache.hits)
    return entries


def total_probability(process, k, config=None):
    """
    Сумма масс Reach_k(P)

    Returns:
        Fraction | NotComputed: Точная сумма или NOT_COMPUTED для пустого множества
    """
    entries = reach(process, k, config)
    if not entries:
        return NOT_COMPUTED
    return sum((entry.mass for entry in entries), Fraction(0))

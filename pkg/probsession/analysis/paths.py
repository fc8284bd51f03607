"""
Пути эволюции и их вероятности
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from ..calculus.binders import check_probability_complete
from ..config import AnalysisConfig
from ..dynamics.congruence import normal_form, state_key
from ..dynamics.semantics import enabled_steps
from ..errors import ExplosionGuard, IncompleteProbability

logger = logging.getLogger(__name__)


class StepCache:
    """Кэш переходов по ключу состояния в пределах одного анализа"""

    def __init__(self):
        self._steps = {}
        self.hits = 0

    def steps(self, state, key=None):
        key = key if key is not None else state_key(state)
        cached = self._steps.get(key)
        if cached is not None:
            self.hits += 1
            return cached
        steps = enabled_steps(state)
        self._steps[key] = steps
        return steps

    def __len__(self):
        return len(self._steps)


def require_complete(process):
    """
    Raises:
        IncompleteProbability: Если вероятности какого-либо выбора не дают 1
    """
    violations = check_probability_complete(process)
    if violations:
        raise IncompleteProbability(violations)


@dataclass(frozen=True)
class EvolutionPath:
    """Путь эволюции: исходный процесс и последовательность переходов"""
    origin: object
    steps: Tuple[object, ...] = ()

    @property
    def probability(self):
        result = Fraction(1)
        for step in self.steps:
            result *= step.prob
        return result

    @property
    def labels(self):
        return tuple(step.label for step in self.steps)

    @property
    def final_state(self):
        return self.steps[-1].target if self.steps else self.origin

    @property
    def final_key(self):
        return self.steps[-1].key if self.steps else state_key(self.origin)

    def __len__(self):
        return len(self.steps)

    def __str__(self):
        labels = " ".join(str(l) for l in self.labels) or "<пусто>"
        return f"{labels} : {self.probability}"


def enumerate_paths(process, depth, config=None, cache=None):
    """
    Все максимальные или ограниченные глубиной пути эволюции

    Путь продолжается, пока состояние не застрянет или длина не достигнет
    depth. Переходы с одинаковой меткой в конгруэнтные состояния склеены,
    поэтому совпадающие пути не повторяются.

    Args:
        process (Process): Вероятностно полный процесс
        depth (int): Наибольшая длина пути
        config (AnalysisConfig): Предел числа путей

    Returns:
        list[EvolutionPath]: Пути в каноническом порядке

    Raises:
        ExplosionGuard: Если число путей превышает предел
        IncompleteProbability: Если процесс не вероятностно полный
    """
    config = config or AnalysisConfig.from_env()
    cache = StepCache() if cache is None else cache
    require_complete(process)
    origin = normal_form(process)
    paths = [EvolutionPath(origin)]
    finished = []
    for _ in range(depth):
        extended = []
        for path in paths:
            steps = cache.steps(path.final_state, path.final_key)
            if not steps:
                finished.append(path)
                continue
            for step in steps:
                extended.append(EvolutionPath(origin, path.steps + (step,)))
            if len(extended) + len(finished) > config.explosion_cap:
                raise ExplosionGuard(config.explosion_cap)
        paths = extended
        if not paths:
            break
    finished.extend(paths)
    logger.debug("Путей: %d, состояний в кэше: %d", len(finished), len(cache))
    return finished

"""
Моделирование методом Монте-Карло и сверка частот с объявленными вероятностями
"""

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..calculus.prob import Interval
from ..config import AnalysisConfig
from ..dynamics.congruence import normal_form, state_key
from ..dynamics.semantics import Comm, find_redexes
from ..typesys.types import Interaction, Rec
from .paths import StepCache, require_complete
from .rng import TrialRNG

logger = logging.getLogger(__name__)

MIN_AUDIT_VISITS = 30


@dataclass(frozen=True)
class AuditEntry:
    """
    Сверка одного перехода

    Attributes:
        state (str): Текст состояния, из которого сделан переход
        label: Метка перехода
        declared (Fraction): Вероятность перехода по семантике
        empirical (Fraction): Наблюдаемая частота среди посещений состояния
        visits (int): Число посещений состояния
        margin (Fraction): Допуск |empirical - declared|
        passed (bool): Частота в пределах допуска
        interval (Interval | None): Интервал глобального типа, расширенный на
            audit_sigmas сигм (для сверки частоты, умноженной на next_proc)
        interval_passed (bool | None): Результат сверки с интервалом
    """
    state: str
    depth: int
    label: object
    declared: Fraction
    empirical: Fraction
    visits: int
    margin: Fraction
    passed: bool
    interval: Optional[Interval] = None
    interval_passed: Optional[bool] = None


@dataclass
class SimulationReport:
    """
    Результат моделирования

    Attributes:
        label_freq (dict): (глубина, метка) -> доля трасс с этим переходом на этой глубине
        audit (list[AuditEntry]): Сверка частот для часто посещаемых состояний
        truncated (int): Число трасс, оборванных по max_trace_steps
    """
    trials: int
    seed: int
    label_freq: Dict[Tuple[int, object], Fraction] = field(default_factory=dict)
    audit: List[AuditEntry] = field(default_factory=list)
    truncated: int = 0

    @property
    def ok(self):
        return all(e.passed and e.interval_passed is not False for e in self.audit)


def _sigma_margin(prob, visits, sigmas):
    variance = float(prob * (1 - prob)) / visits
    return Fraction(float(sigmas * np.sqrt(variance))).limit_denominator(10 ** 9)


def declared_intervals(global_type):
    """
    Интервалы глобального типа по (отправитель, получатель, метка)

    Метки, встречающиеся с разными интервалами, в результат не входят.
    """
    found = defaultdict(set)

    def visit(term):
        if isinstance(term, Rec):
            visit(term.body)
        elif isinstance(term, Interaction):
            for branch in term.branches:
                found[(term.sender, term.receiver, branch.label)].add(branch.delta)
                visit(branch.cont)

    visit(global_type)
    return {key: next(iter(deltas)) for key, deltas in found.items() if len(deltas) == 1}


class _Tally:
    """Счётчики посещений состояний и выборов переходов"""

    def __init__(self):
        self.visits = Counter()
        self.choices = Counter()
        self.labels = Counter()
        self.states = {}
        self.depths = {}

    def record(self, key, state, depth, index, label):
        self.visits[key] += 1
        self.choices[(key, index)] += 1
        self.labels[(depth, label)] += 1
        self.states.setdefault(key, state)
        self.depths[key] = min(depth, self.depths.get(key, depth))


def _run_trial(start, start_key, rng, cache, config, tally):
    state, key = start, start_key
    for depth in range(config.max_trace_steps):
        steps = cache.steps(state, key)
        if not steps:
            return False
        index = rng.choose([s.prob for s in steps]) if len(steps) > 1 else 0
        step = steps[index]
        tally.record(key, state, depth, index, step.label)
        state, key = step.target, step.key
    return bool(cache.steps(state, key))


def simulate(process, trials, seed, global_type=None, config=None):
    """
    Моделирует trials независимых трасс

    Каждая трасса идёт до застревания или max_trace_steps шагов; переход
    выбирается точно по рациональным вероятностям. Сверка: для состояний,
    посещённых не менее MIN_AUDIT_VISITS раз, частота каждого перехода
    сравнивается с его вероятностью (допуск audit_sigmas * σ + audit_slack);
    при заданном global_type частота коммуникации, умноженная на next_proc
    состояния, сравнивается с интервалом, расширенным на audit_sigmas * σ.

    Args:
        process (Process): Вероятностно полный процесс
        trials (int): Число трасс (>= 1)
        seed (int): 64-битное зерно
        global_type (GlobalType): Аннотация для сверки с интервалами

    Returns:
        SimulationReport: Частоты меток и сверка
    """
    if trials < 1:
        raise ValueError(f"Число трасс должно быть положительным: {trials}")
    config = config or AnalysisConfig.from_env()
    require_complete(process)
    cache = StepCache()
    start = normal_form(process)
    start_key = state_key(start)

    tally = _Tally()
    report = SimulationReport(trials, seed)
    for trial in range(trials):
        rng = TrialRNG(seed, trial)
        if _run_trial(start, start_key, rng, cache, config, tally):
            report.truncated += 1
    report.label_freq = {
        slot: Fraction(count, trials) for slot, count in sorted(
            tally.labels.items(), key=lambda item: (item[0][0], item[0][1].sort_key())
        )
    }

    intervals = declared_intervals(global_type) if global_type is not None else {}
    audited = sorted((k for k, n in tally.visits.items() if n >= MIN_AUDIT_VISITS),
                     key=lambda k: (tally.depths[k], k))
    for key in audited:
        n, state = tally.visits[key], tally.states[key]
        steps = cache.steps(state, key)
        redex_count = len(find_redexes(state).redexes)
        for index, step in enumerate(steps):
            empirical = Fraction(tally.choices[(key, index)], n)
            margin = _sigma_margin(step.prob, n, config.audit_sigmas) + config.audit_slack
            passed = abs(empirical - step.prob) <= margin
            interval, interval_passed = None, None
            if isinstance(step.label, Comm):
                delta = intervals.get((step.label.sender, step.label.receiver, step.label.label))
                if delta is not None:
                    widened = delta.widen(redex_count * _sigma_margin(step.prob, n, config.audit_sigmas))
                    interval, interval_passed = widened, empirical * redex_count in widened
            if not passed or interval_passed is False:
                logger.warning("Сверка частот не пройдена: %s %s: %s при %s",
                               state, step.label, empirical, step.prob)
            report.audit.append(AuditEntry(str(state), tally.depths[key], step.label, step.prob,
                                           empirical, n, margin, passed, interval, interval_passed))
    logger.info("Моделирование: трасс %d, состояний %d, проверено %d",
                trials, len(cache), len(report.audit))
    return report


"""
Параметры анализа

Значения по умолчанию переопределяются переменными окружения, а те, в свою
очередь, флагами командной строки.
"""

import os
from dataclasses import dataclass, replace
from fractions import Fraction

from .errors import ConfigError

ENV_EXPLOSION_CAP = "PROBSESSION_EXPLOSION_CAP"
ENV_MAX_TRACE_STEPS = "PROBSESSION_MAX_TRACE_STEPS"


@dataclass(frozen=True)
class AnalysisConfig:
    """
    Настройки исследования пространства состояний и моделирования

    Attributes:
        explosion_cap (int): Предел числа состояний/путей
        max_trace_steps (int): Предел длины одной трассы моделирования
        audit_sigmas (int): Ширина полосы проверки в сигмах
        audit_slack (Fraction): Дополнительный допуск проверки частот
    """

    explosion_cap: int = 100_000
    max_trace_steps: int = 100
    audit_sigmas: int = 3
    audit_slack: Fraction = Fraction(1, 200)

    def __post_init__(self):
        if self.explosion_cap < 1:
            raise ConfigError(f"explosion_cap должен быть положительным: {self.explosion_cap}")
        if self.max_trace_steps < 1:
            raise ConfigError(f"max_trace_steps должен быть положительным: {self.max_trace_steps}")
        if self.audit_sigmas <= 0:
            raise ConfigError(f"audit_sigmas должен быть положительным: {self.audit_sigmas}")

    @classmethod
    def from_env(cls, environ=None):
        """
        Создаёт конфигурацию из переменных окружения

        Args:
            environ (Mapping): Окружение (по умолчанию os.environ)

        Raises:
            ConfigError: Если значение переменной не является целым числом
        """
        environ = os.environ if environ is None else environ
        values = {}
        for key, field in ((ENV_EXPLOSION_CAP, "explosion_cap"), (ENV_MAX_TRACE_STEPS, "max_trace_steps")):
            raw = environ.get(key)
            if raw is None or raw.strip() == "":
                continue
            try:
                values[field] = int(raw)
            except ValueError:
                raise ConfigError(f"{key} должна быть целым числом: {raw!r}") from None
        return cls(**values)

    def with_overrides(self, **overrides):
        """Возвращает копию с заменёнными полями (None означает «не менять»)"""
        changes = {name: value for name, value in overrides.items() if value is not None}
        return replace(self, **changes) if changes else self

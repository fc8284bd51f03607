"""
Манифест корпуса примеров

typed: процесс замкнут и типизируется своими аннотациями.
variants: файлы .gty, подставляемые вместо аннотации сессии `session`
при проверке пересечения.
expect_deadlock: семантическое исследование должно найти застрявшее
состояние, не конгруэнтное 0.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Tuple

from ..loaders.gty_reader import GtyReader
from ..loaders.mps_reader import MpsReader

FIXTURE_DIR = Path(__file__).resolve().parent

INTERVAL_VARIANTS = ("ga_open.gty", "ga_bounded.gty", "ga_narrow.gty", "ga_unreachable.gty")


@dataclass(frozen=True)
class FixtureEntry:
    name: str
    filename: str
    typed: bool
    session: str = "s"
    variants: Tuple[str, ...] = ()
    expect_deadlock: bool = False

    @property
    def path(self):
        return FIXTURE_DIR / self.filename


CORPUS = (
    FixtureEntry("system_simple", "system_simple.mps", typed=True, variants=INTERVAL_VARIANTS),
    FixtureEntry("system_full", "system_full.mps", typed=False),
    FixtureEntry("com_two", "com_two.mps", typed=True),
    FixtureEntry("call_demo", "call_demo.mps", typed=True),
    FixtureEntry("deadlock_mismatch", "deadlock_mismatch.mps", typed=False, expect_deadlock=True),
)


def load_fixture(entry):
    """Процесс примера"""
    return MpsReader().read(entry.path)


def load_variants(entry):
    """Глобальные типы вариантов аннотации примера"""
    reader = GtyReader()
    return [reader.read(FIXTURE_DIR / name) for name in entry.variants]


def typed_entries():
    return [entry for entry in CORPUS if entry.typed]


def fixture_entry(name):
    """
    Raises:
        KeyError: Если пример с таким именем отсутствует
    """
    for entry in CORPUS:
        if entry.name == name:
            return entry
    raise KeyError(name)

"""
Окружения проверки типов: сортировка Γ и типизация Δ
"""

from dataclasses import dataclass, field
from typing import Mapping, Tuple

from ..calculus.process import SessionRole
from ..errors import NonDisjointTyping
from ..typesys.equality import types_equal
from ..typesys.types import End, Sort, unfold


@dataclass(frozen=True)
class ProcSignature:
    """
    Сигнатура процессной переменной X: S~ T~

    Attributes:
        params (tuple): Для каждого параметра либо Sort (значение),
            либо локальный тип (канал)
    """
    params: Tuple[object, ...]

    def __str__(self):
        return "(" + ", ".join(str(p) for p in self.params) + ")"


@dataclass(frozen=True)
class Sorting:
    """Γ: сорта переменных и сигнатуры процессных переменных"""
    values: Mapping[str, Sort] = field(default_factory=dict)
    procs: Mapping[str, ProcSignature] = field(default_factory=dict)

    def with_value(self, name, sort):
        return Sorting({**self.values, name: sort}, self.procs)

    def with_proc(self, name, signature):
        return Sorting(self.values, {**self.procs, name: signature})

    def without_proc(self, name):
        return Sorting(self.values, {k: v for k, v in self.procs.items() if k != name})

    def sort_of(self, name):
        return self.values.get(name)

    def signature(self, name):
        return self.procs.get(name)

    def __hash__(self):
        return hash((frozenset(self.values.items()), frozenset(self.procs.items())))


EMPTY_SORTING = Sorting()


def channel_key(channel):
    """Ключ упорядочивания каналов при выводе"""
    if isinstance(channel, SessionRole):
        return (0, channel.session, channel.role)
    return (1, channel.name, "")


class Typing:
    """
    Δ: конечное отображение канал -> локальный тип

    Объект неизменяем; операции возвращают новые типизации.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries=None):
        self._entries = dict(entries or {})

    def channels(self):
        return sorted(self._entries, key=channel_key)

    def items(self):
        return [(c, self._entries[c]) for c in self.channels()]

    def __getitem__(self, channel):
        return self._entries[channel]

    def get(self, channel, default=None):
        return self._entries.get(channel, default)

    def __contains__(self, channel):
        return channel in self._entries

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self.channels())

    def with_entry(self, channel, local_type):
        return Typing({**self._entries, channel: local_type})

    def without(self, *channels):
        return Typing({c: t for c, t in self._entries.items() if c not in channels})

    def compose(self, other):
        """
        Дизъюнктное объединение Δ, Δ'

        Raises:
            NonDisjointTyping: Если области определения пересекаются
        """
        for channel in other.channels():
            if channel in self._entries:
                raise NonDisjointTyping(channel)
        return Typing({**self._entries, **other._entries})

    def is_end_only(self):
        return all(isinstance(unfold(t), End) for t in self._entries.values())

    def sessions(self):
        return sorted({c.session for c in self._entries if isinstance(c, SessionRole)})

    def equivalent(self, other):
        """Равенство областей и эквирекурсивное равенство типов"""
        if set(self._entries) != set(other._entries):
            return False
        return all(types_equal(t, other._entries[c]) for c, t in self._entries.items())

    def __eq__(self, other):
        return isinstance(other, Typing) and self._entries == other._entries

    def __hash__(self):
        return hash(frozenset(self._entries.items()))

    def __str__(self):
        if not self._entries:
            return "∅"
        return ", ".join(f"{c}: {t}" for c, t in self.items())

    def __repr__(self):
        return f"Typing({self})"


EMPTY_TYPING = Typing()

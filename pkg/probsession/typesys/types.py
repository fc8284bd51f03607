"""
Сорта, глобальные и локальные типы

Конструкторы Rec, TVar и End общие для глобальных и локальных типов.
Интервал у ветви SelectT может отсутствовать (None) - это стёртый тип.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple, Union

from ..calculus.prob import Interval
from ..errors import DuplicateLabel, EmptyChoice, SelfCommunication, UnboundTypeVar, UnguardedRecursion


class Sort(Enum):
    NAT = "nat"
    INT = "int"
    BOOL = "bool"
    STR = "string"

    def __str__(self):
        return self.value

    @staticmethod
    def parse(text):
        for sort in Sort:
            if sort.value == text:
                return sort
        raise ValueError(f"Неизвестный сорт: {text}")


class _Printable:
    def __str__(self):
        from ..loaders.printer import pretty_print
        return pretty_print(self)

    def __repr__(self):
        return f"{type(self).__name__}({self})"


def _check_labels(branches):
    if not branches:
        raise EmptyChoice()
    labels = [b.label for b in branches]
    for label in labels:
        if labels.count(label) > 1:
            raise DuplicateLabel(label)


# ---------------------------------------------------------------------------
# Общие конструкторы
# ---------------------------------------------------------------------------

@dataclass(frozen=True, repr=False)
class End(_Printable):
    pass


@dataclass(frozen=True, repr=False)
class TVar(_Printable):
    name: str


@dataclass(frozen=True, repr=False)
class Rec(_Printable):
    var: str
    body: "object"

    def __post_init__(self):
        if self.body == TVar(self.var):
            raise UnguardedRecursion(self.var)


END = End()


# ---------------------------------------------------------------------------
# Глобальные типы
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GBranch:
    delta: Interval
    label: str
    sort: Sort
    cont: "GlobalType"


@dataclass(frozen=True, repr=False)
class Interaction(_Printable):
    """sender -> receiver { delta_i: l_i(S_i). G_i }"""
    sender: str
    receiver: str
    branches: Tuple[GBranch, ...]

    def __post_init__(self):
        if self.sender == self.receiver:
            raise SelfCommunication(self.sender)
        object.__setattr__(self, "branches", tuple(self.branches))
        _check_labels(self.branches)

    def deltas(self):
        return [b.delta for b in self.branches]


GlobalType = Union[Interaction, Rec, TVar, End]


# ---------------------------------------------------------------------------
# Локальные типы
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LSelect:
    delta: Optional[Interval]
    label: str
    sort: Sort
    cont: "LocalType"


@dataclass(frozen=True)
class LBranch:
    label: str
    sort: Sort
    cont: "LocalType"


@dataclass(frozen=True, repr=False)
class SelectT(_Printable):
    """partner (+){ delta_i: !l_i(S_i). T_i }"""
    partner: str
    branches: Tuple[LSelect, ...]

    def __post_init__(self):
        object.__setattr__(self, "branches", tuple(self.branches))
        _check_labels(self.branches)

    def branch(self, label):
        return next((b for b in self.branches if b.label == label), None)

    def labels(self):
        return [b.label for b in self.branches]


@dataclass(frozen=True, repr=False)
class BranchT(_Printable):
    """partner &{ ?l_i(S_i). T_i }"""
    partner: str
    branches: Tuple[LBranch, ...]

    def __post_init__(self):
        object.__setattr__(self, "branches", tuple(self.branches))
        _check_labels(self.branches)

    def branch(self, label):
        return next((b for b in self.branches if b.label == label), None)

    def labels(self):
        return [b.label for b in self.branches]


LocalType = Union[SelectT, BranchT, Rec, TVar, End]


# ---------------------------------------------------------------------------
# Структурные проверки
# ---------------------------------------------------------------------------

def _children(term):
    if isinstance(term, (Interaction, SelectT, BranchT)):
        return [b.cont for b in term.branches]
    return []


def free_type_vars(term):
    """Свободные переменные типа"""
    if isinstance(term, TVar):
        return {term.name}
    if isinstance(term, Rec):
        return free_type_vars(term.body) - {term.var}
    result = set()
    for child in _children(term):
        result |= free_type_vars(child)
    return result


def check_type_term(term):
    """
    Проверяет, что все переменные типа связаны и рекурсия защищена

    Raises:
        UnboundTypeVar: Если есть свободная переменная типа
        UnguardedRecursion: Если тело rec t сводится к переменной без префикса
    """
    unbound = sorted(free_type_vars(term))
    if unbound:
        raise UnboundTypeVar(unbound[0])

    def visit(t, unguarded):
        if isinstance(t, TVar):
            if t.name in unguarded:
                raise UnguardedRecursion(t.name)
        elif isinstance(t, Rec):
            visit(t.body, unguarded | {t.var})
        else:
            for child in _children(t):
                visit(child, frozenset())

    visit(term, frozenset())
    return term


def substitute_type_var(term, name, replacement):
    """T[replacement/name] для замкнутого replacement"""
    if isinstance(term, TVar):
        return replacement if term.name == name else term
    if isinstance(term, End):
        return term
    if isinstance(term, Rec):
        if term.var == name:
            return term
        return Rec(term.var, substitute_type_var(term.body, name, replacement))
    if isinstance(term, Interaction):
        return Interaction(term.sender, term.receiver, tuple(
            GBranch(b.delta, b.label, b.sort, substitute_type_var(b.cont, name, replacement))
            for b in term.branches
        ))
    if isinstance(term, SelectT):
        return SelectT(term.partner, tuple(
            LSelect(b.delta, b.label, b.sort, substitute_type_var(b.cont, name, replacement))
            for b in term.branches
        ))
    if isinstance(term, BranchT):
        return BranchT(term.partner, tuple(
            LBranch(b.label, b.sort, substitute_type_var(b.cont, name, replacement))
            for b in term.branches
        ))
    raise TypeError(f"Неизвестный тип: {term!r}")


def unfold(term):
    """Разворачивает rec в голове терма, пока голова не станет префиксом"""
    seen = 0
    while isinstance(term, Rec):
        term = substitute_type_var(term.body, term.var, term)
        seen += 1
        if seen > 1000:
            raise UnguardedRecursion(term.var if isinstance(term, Rec) else "?")
    return term

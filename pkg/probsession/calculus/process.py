"""
Абстрактный синтаксис процессов вероятностного мультипартийного исчисления

Все узлы - неизменяемые dataclass-объекты, поэтому их можно хешировать,
сравнивать и свободно разделять между потоками.

Значения:   SessionName | Bool | Int | Str   (и Var в позициях значений)
Каналы:     Var | SessionRole
Процессы:   Select | Branch | Restrict | Def | Call | Nil | Par
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple, Union

from ..errors import DuplicateLabel, EmptyChoice, InvalidProbability


class _Printable:
    """Текстовое представление через форматтер (импорт отложен из-за цикла)"""

    def __str__(self):
        from ..loaders.printer import pretty_print
        return pretty_print(self)


# ---------------------------------------------------------------------------
# Значения и каналы
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SessionName:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Bool:
    value: bool

    def __str__(self):
        return "true" if self.value else "false"


@dataclass(frozen=True)
class Int:
    value: int

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class Str:
    value: str

    def __str__(self):
        escaped = self.value.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{escaped}"'


@dataclass(frozen=True)
class Var:
    """Переменная: в позиции канала или значения"""
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class SessionRole:
    """Канал с ролью s[r]"""
    session: str
    role: str

    def __post_init__(self):
        if not self.role:
            raise ValueError("Имя роли не может быть пустым")

    def __str__(self):
        return f"{self.session}[{self.role}]"


Value = Union[SessionName, Bool, Int, Str]
Channel = Union[Var, SessionRole]
Term = Union[SessionName, Bool, Int, Str, Var, SessionRole]

CHANNEL_TYPES = (Var, SessionRole)
LITERAL_TYPES = (Bool, Int, Str)


# ---------------------------------------------------------------------------
# Процессы
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SelectBranch:
    """Ветвь выбора p: l(v). P"""
    prob: Fraction
    label: str
    payload: Term
    cont: "Process"

    def __post_init__(self):
        prob = Fraction(self.prob)
        if prob < 0 or prob > 1:
            raise InvalidProbability(self.prob)
        object.__setattr__(self, "prob", prob)


@dataclass(frozen=True)
class BranchArm:
    """Ветвь ветвления l(x). P"""
    label: str
    binder: str
    cont: "Process"


def _check_labels(branches):
    if not branches:
        raise EmptyChoice()
    seen = set()
    for branch in branches:
        if branch.label in seen:
            raise DuplicateLabel(branch.label)
        seen.add(branch.label)


@dataclass(frozen=True, repr=False)
class Select(_Printable):
    """c[partner](+){ p_i: l_i(v_i). P_i }"""
    chan: Channel
    partner: str
    branches: Tuple[SelectBranch, ...]

    def __post_init__(self):
        object.__setattr__(self, "branches", tuple(self.branches))
        _check_labels(self.branches)

    def labels(self):
        return [b.label for b in self.branches]

    def branch(self, label):
        return next((b for b in self.branches if b.label == label), None)

    def __repr__(self):
        return f"Select({self})"


@dataclass(frozen=True, repr=False)
class Branch(_Printable):
    """c[partner]&{ l_i(x_i). P_i }"""
    chan: Channel
    partner: str
    branches: Tuple[BranchArm, ...]

    def __post_init__(self):
        object.__setattr__(self, "branches", tuple(self.branches))
        _check_labels(self.branches)

    def labels(self):
        return [b.label for b in self.branches]

    def arm(self, label):
        return next((b for b in self.branches if b.label == label), None)

    def __repr__(self):
        return f"Branch({self})"


@dataclass(frozen=True, repr=False)
class Restrict(_Printable):
    """new s [: G] . P"""
    session: str
    body: "Process"
    annotation: Optional[object] = field(default=None)

    def __repr__(self):
        return f"Restrict({self})"


@dataclass(frozen=True, repr=False)
class Def(_Printable):
    """def X(x_1, ..., x_n) = body in scope"""
    name: str
    params: Tuple[str, ...]
    body: "Process"
    scope: "Process"

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(self.params))
        if len(set(self.params)) != len(self.params):
            raise ValueError(f"Повторяющиеся параметры в определении {self.name}")

    def __repr__(self):
        return f"Def({self})"


@dataclass(frozen=True, repr=False)
class Call(_Printable):
    """X(v_1, ..., v_n)"""
    name: str
    args: Tuple[Term, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))

    def __repr__(self):
        return f"Call({self})"


@dataclass(frozen=True, repr=False)
class Nil(_Printable):
    def __repr__(self):
        return "Nil"


@dataclass(frozen=True, repr=False)
class Par(_Printable):
    left: "Process"
    right: "Process"

    def __repr__(self):
        return f"Par({self})"


Process = Union[Select, Branch, Restrict, Def, Call, Nil, Par]
PROCESS_TYPES = (Select, Branch, Restrict, Def, Call, Nil, Par)

NIL = Nil()


def par(*processes):
    """
    Параллельная композиция списка процессов (вложенность вправо)

    Пустой список даёт Nil, один процесс - сам процесс.
    """
    if not processes:
        return NIL
    result = processes[-1]
    for process in reversed(processes[:-1]):
        result = Par(process, result)
    return result


def components(process):
    """Разворачивает вложенные Par в список компонент слева направо"""
    if isinstance(process, Par):
        return components(process.left) + components(process.right)
    return [process]

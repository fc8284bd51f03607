"""
Вероятностная одношаговая редукция

Редексы ищутся на верхнем уровне нормальной формы:
- коммуникация: выбор на s[r1] с партнёром r2 и ветвление на s[r2] с
  партнёром r1, если метки выбора содержатся в метках ветвления;
- вызов: вызов определения верхнего уровня.

Планировщик равномерный: ветвь j редекса срабатывает с вероятностью p_j / m,
вызов - с вероятностью 1 / m, где m - число доступных редексов.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Tuple

from ..calculus.binders import instantiate, substitute
from ..calculus.process import Branch, Call, Select, SessionRole
from .congruence import decompose, normal_form, state_key

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Comm:
    """Метка коммуникации (отправитель, получатель, метка ветви)"""
    sender: str
    receiver: str
    label: str

    def sort_key(self):
        return (1, self.sender, self.receiver, self.label)

    def __str__(self):
        return f"({self.sender},{self.receiver},{self.label})"


@dataclass(frozen=True)
class Eps:
    """Метка раскрытия вызова"""

    def sort_key(self):
        return (0, "", "", "")

    def __str__(self):
        return "eps"


EPS = Eps()


@dataclass(frozen=True)
class Step:
    """
    Переход P -(label)->_prob target

    Attributes:
        key (str): state_key(target), вычисляется один раз
    """
    label: object
    prob: Fraction
    target: object
    key: str = field(default="", compare=False)


@dataclass(frozen=True)
class CommMismatch:
    """Пара выбор/ветвление, у которой метки выбора не содержатся в ветвлении"""
    sender: str
    receiver: str
    labels: Tuple[str, ...]

    def __str__(self):
        return f"{self.sender} -> {self.receiver}: нет ветвей для {', '.join(self.labels)}"


@dataclass(frozen=True)
class ComRedex:
    select: int
    branch: int


@dataclass(frozen=True)
class CallRedex:
    call: int


@dataclass(frozen=True)
class RedexScan:
    """Доступные редексы и диагностика несовпадений"""
    redexes: Tuple[object, ...]
    mismatches: Tuple[CommMismatch, ...]
    layers: object


def _scan(layers):
    redexes, mismatches = [], []
    defined = {d.name for d in layers.defs}
    atoms = layers.atoms
    for i, sel in enumerate(atoms):
        if not isinstance(sel, Select) or not isinstance(sel.chan, SessionRole):
            continue
        for j, br in enumerate(atoms):
            if not isinstance(br, Branch) or not isinstance(br.chan, SessionRole):
                continue
            if br.chan != SessionRole(sel.chan.session, sel.partner) or br.partner != sel.chan.role:
                continue
            missing = tuple(l for l in sel.labels() if br.arm(l) is None)
            if missing:
                mismatches.append(CommMismatch(sel.chan.role, sel.partner, missing))
                logger.debug("Коммуникация %s -> %s заблокирована: %s", sel.chan.role, sel.partner, missing)
            else:
                redexes.append(ComRedex(i, j))
    for i, atom in enumerate(atoms):
        if isinstance(atom, Call) and atom.name in defined:
            redexes.append(CallRedex(i))
    return redexes, mismatches


def find_redexes(process):
    """
    Доступные редексы нормальной формы процесса

    Returns:
        RedexScan: Редексы (ComRedex / CallRedex), несовпадения CommMismatch
            и слои нормальной формы, к индексам атомов которых относятся редексы
    """
    layers = decompose(normal_form(process))
    redexes, mismatches = _scan(layers)
    return RedexScan(tuple(redexes), tuple(mismatches), layers)


def next_proc(process):
    """Число доступных редексов (коммуникаций и вызовов)"""
    return len(find_redexes(process).redexes)


def _replace(layers, replacements):
    """Слои с заменой атомов по индексам (None - удалить)"""
    atoms = []
    for index, atom in enumerate(layers.atoms):
        if index not in replacements:
            atoms.append(atom)
        elif replacements[index] is not None:
            atoms.append(replacements[index])
    return type(layers)(list(layers.restricts), list(layers.defs), atoms).assemble()


def _redex_steps(layers, redex, share):
    if isinstance(redex, CallRedex):
        call = layers.atoms[redex.call]
        definition = layers.def_map()[call.name]
        body = instantiate(call.name, definition.params, call.args, definition.body)
        yield EPS, share, _replace(layers, {redex.call: body})
        return
    sel = layers.atoms[redex.select]
    br = layers.atoms[redex.branch]
    for branch in sel.branches:
        if branch.prob == 0:
            continue
        arm = br.arm(branch.label)
        received = substitute(arm.cont, {arm.binder: branch.payload})
        target = _replace(layers, {redex.select: branch.cont, redex.branch: received})
        yield Comm(sel.chan.role, sel.partner, branch.label), branch.prob * share, target


def enabled_steps(process, merge=True):
    """
    Одношаговые переходы процесса

    Args:
        process (Process): Вероятностно полный процесс
        merge (bool): Склеивать переходы с одинаковой меткой в конгруэнтные
            состояния, суммируя вероятности

    Returns:
        list[Step]: Переходы в каноническом порядке (метка, ключ состояния);
            пустой список для застрявшего процесса

    Raises:
        ArityMismatch: При вызове с неверным числом аргументов
    """
    scan = find_redexes(process)
    if not scan.redexes:
        return []
    share = Fraction(1, len(scan.redexes))
    steps = []
    for redex in scan.redexes:
        for label, prob, target in _redex_steps(scan.layers, redex, share):
            target = normal_form(target)
            steps.append(Step(label, prob, target, state_key(target)))

    if merge:
        merged = {}
        for step in steps:
            slot = (step.label, step.key)
            if slot in merged:
                first = merged[slot]
                merged[slot] = Step(first.label, first.prob + step.prob, first.target, first.key)
            else:
                merged[slot] = step
        steps = list(merged.values())
    steps.sort(key=lambda s: (s.label.sort_key(), s.key))
    return steps

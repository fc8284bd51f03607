"""
Помеченная редукция типизаций
"""

from dataclasses import dataclass

from ..calculus.process import SessionRole
from ..dynamics.semantics import Comm
from ..typesys.types import BranchT, SelectT, unfold
from .environment import Typing


@dataclass(frozen=True)
class TypeStep:
    """Δ =(label)=>_delta target"""
    label: object
    delta: object
    target: Typing


def type_step(typing, label):
    """
    Все редукции типизации по метке коммуникации

    Выбор s[r1]: r2 (+) {...} и ветвление s[r2]: r1 & {...} с общей меткой
    сокращаются одновременно, остальные записи переносятся без изменений.
    Рекурсивные типы разворачиваются один раз перед сопоставлением.

    Args:
        typing (Typing): Исходная типизация
        label (Comm | Eps): Метка перехода

    Returns:
        list[TypeStep]: Пустой список для Eps и при отсутствии совпадений
    """
    if not isinstance(label, Comm):
        return []
    steps = []
    for channel in typing.channels():
        if not isinstance(channel, SessionRole) or channel.role != label.sender:
            continue
        select = unfold(typing[channel])
        if not isinstance(select, SelectT) or select.partner != label.receiver:
            continue
        chosen = select.branch(label.label)
        if chosen is None:
            continue
        partner = SessionRole(channel.session, label.receiver)
        if partner not in typing:
            continue
        branch = unfold(typing[partner])
        if not isinstance(branch, BranchT) or branch.partner != label.sender:
            continue
        received = branch.branch(label.label)
        if received is None:
            continue
        target = typing.with_entry(channel, chosen.cont).with_entry(partner, received.cont)
        steps.append(TypeStep(label, chosen.delta, target))
    return steps

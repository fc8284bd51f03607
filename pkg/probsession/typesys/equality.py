"""
Эквирекурсивное равенство типов

Два регулярных типа равны, если их развёртки бисимилярны. Проверка ведётся
по графу пар (T1, T2) с множеством предположений: пара, уже встреченная
раньше, считается равной.
"""

from .types import BranchT, End, Interaction, SelectT, TVar, unfold


def _successors(left, right, erased):
    """
    Сравнивает головы двух развёрнутых типов

    Returns:
        list | None: Пары продолжений для дальнейшей проверки или None при различии
    """
    if isinstance(left, End) and isinstance(right, End):
        return []
    if isinstance(left, TVar) and isinstance(right, TVar):
        return [] if left.name == right.name else None
    if isinstance(left, SelectT) and isinstance(right, SelectT):
        if left.partner != right.partner or set(left.labels()) != set(right.labels()):
            return None
        pairs = []
        for branch in left.branches:
            other = right.branch(branch.label)
            if branch.sort != other.sort:
                return None
            if not erased and branch.delta != other.delta:
                return None
            pairs.append((branch.cont, other.cont))
        return pairs
    if isinstance(left, BranchT) and isinstance(right, BranchT):
        if left.partner != right.partner or set(left.labels()) != set(right.labels()):
            return None
        pairs = []
        for branch in left.branches:
            other = right.branch(branch.label)
            if branch.sort != other.sort:
                return None
            pairs.append((branch.cont, other.cont))
        return pairs
    if isinstance(left, Interaction) and isinstance(right, Interaction):
        if (left.sender, left.receiver) != (right.sender, right.receiver):
            return None
        right_by_label = {b.label: b for b in right.branches}
        if set(right_by_label) != {b.label for b in left.branches}:
            return None
        pairs = []
        for branch in left.branches:
            other = right_by_label[branch.label]
            if branch.sort != other.sort:
                return None
            if not erased and branch.delta != other.delta:
                return None
            pairs.append((branch.cont, other.cont))
        return pairs
    return None


def types_equal(left, right, erased=False):
    """
    Эквирекурсивное равенство двух типов (локальных или глобальных)

    Args:
        left, right: Сравниваемые типы
        erased (bool): Не учитывать интервалы

    Returns:
        bool: True, если развёртки типов совпадают
    """
    assumed = set()
    pending = [(left, right)]
    while pending:
        pair = pending.pop()
        if pair in assumed:
            continue
        assumed.add(pair)
        nexts = _successors(unfold(pair[0]), unfold(pair[1]), erased)
        if nexts is None:
            return False
        pending.extend(nexts)
    return True


def erased_equal(left, right):
    """Равенство без учёта интервалов"""
    return types_equal(left, right, erased=True)

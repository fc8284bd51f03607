"""
Текстовая форма процессов и типов

Вывод pretty_print читается обратно parse_process / parse_global_type /
parse_local_type (для процессов без канонических имён вида _n0).
"""

from ..calculus.prob import Interval, short_prob
from ..calculus.process import (
    Branch, Call, Def, Nil, Par, Restrict, Select, components,
)
from ..typesys.types import BranchT, End, Interaction, Rec, SelectT, TVar


def _prefix(process):
    text = _process(process)
    return f"({text})" if isinstance(process, Par) else text


def _process(process):
    if isinstance(process, Nil):
        return "0"
    if isinstance(process, Par):
        return " | ".join(_prefix(p) for p in components(process))
    if isinstance(process, Select):
        branches = " , ".join(
            f"{short_prob(b.prob)}: {b.label}({b.payload}). {_prefix(b.cont)}"
            for b in process.branches
        )
        return f"{process.chan}[{process.partner}](+){{ {branches} }}"
    if isinstance(process, Branch):
        arms = " , ".join(f"{a.label}({a.binder}). {_prefix(a.cont)}" for a in process.branches)
        return f"{process.chan}[{process.partner}]&{{ {arms} }}"
    if isinstance(process, Restrict):
        annotation = ""
        if process.annotation is not None:
            annotation = f" : < {_type(process.annotation)} >"
        return f"new {process.session}{annotation} . {_prefix(process.body)}"
    if isinstance(process, Def):
        params = ", ".join(process.params)
        return f"def {process.name}({params}) = {_prefix(process.body)} in {_prefix(process.scope)}"
    if isinstance(process, Call):
        args = ", ".join(str(a) for a in process.args)
        return f"{process.name}({args})"
    raise TypeError(f"Неизвестный узел процесса: {process!r}")


def _type(term):
    if isinstance(term, End):
        return "end"
    if isinstance(term, TVar):
        return term.name
    if isinstance(term, Rec):
        return f"rec {term.var} . {_type(term.body)}"
    if isinstance(term, Interaction):
        branches = " , ".join(
            f"{b.delta}: {b.label}({b.sort}). {_type(b.cont)}" for b in term.branches
        )
        return f"{term.sender} -> {term.receiver} {{ {branches} }}"
    if isinstance(term, SelectT):
        items = []
        for b in term.branches:
            delta = f"{b.delta}: " if b.delta is not None else ""
            items.append(f"{delta}!{b.label}({b.sort}). {_type(b.cont)}")
        return f"{term.partner} (+){{ {' , '.join(items)} }}"
    if isinstance(term, BranchT):
        items = " , ".join(f"?{b.label}({b.sort}). {_type(b.cont)}" for b in term.branches)
        return f"{term.partner} &{{ {items} }}"
    raise TypeError(f"Неизвестный тип: {term!r}")


def pretty_print(term):
    """
    Текст процесса, глобального или локального типа либо интервала

    Args:
        term: Process | GlobalType | LocalType | Interval

    Returns:
        str: Однострочное представление
    """
    if isinstance(term, Interval):
        return str(term)
    if isinstance(term, (End, TVar, Rec, Interaction, SelectT, BranchT)):
        return _type(term)
    return _process(term)

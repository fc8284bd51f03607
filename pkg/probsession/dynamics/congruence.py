"""
Структурная конгруэнтность процессов

Нормальная форма строится так:
1. ограничения и определения верхнего уровня поднимаются наружу (с
   переименованием связывателей при конфликте имён);
2. параллельные компоненты (выборы, ветвления, вызовы) собираются в список,
   нули отбрасываются, продолжения и тела определений нормализуются
   рекурсивно;
3. удаляются мёртвые определения (не вызываемые) и мёртвые ограничения
   (имя не свободно);
4. поднятые связыватели раскрашиваются по контекстам вхождений; среди
   порядков связывателей, согласованных с раскраской, выбирается порядок
   с наименьшим структурным ключом, компоненты сортируются по ключу при
   этом порядке. Ключи считаются после замены связанных имён служебными
   (_r0, _D0, ...) и повторной нормализации, поэтому не зависят от
   исходных имён.

Результат: цепочка Restrict -> цепочка Def -> правовложенный Par (или Nil).
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import groupby, permutations, product
from math import factorial, prod

from ..calculus.alpha import alpha_canonical, struct_equal, structural_form
from ..calculus.binders import (
    declared_proc_vars, free_names, free_proc_vars, fresh_name,
    rename_names, rename_proc_vars,
)
from ..calculus.process import (
    NIL, Branch, BranchArm, Call, Def, Nil, Par, Restrict, Select, SelectBranch, par,
)

logger = logging.getLogger(__name__)

_RESTRICTED = "_r"
_DEFINED = "_D"

SEARCH_LIMIT = 5040


@dataclass
class Layers:
    """Разобранная нормальная форма: ограничения, определения, компоненты"""
    restricts: list = field(default_factory=list)
    defs: list = field(default_factory=list)
    atoms: list = field(default_factory=list)

    def assemble(self):
        result = par(*self.atoms)
        for definition in reversed(self.defs):
            result = Def(definition.name, definition.params, definition.body, result)
        for name, annotation in reversed(self.restricts):
            result = Restrict(name, result, annotation)
        return result

    def def_map(self):
        return {d.name: d for d in self.defs}


def _collect(process, layers, taken, taken_proc):
    if isinstance(process, Nil):
        return
    if isinstance(process, Par):
        _collect(process.left, layers, taken, taken_proc)
        _collect(process.right, layers, taken, taken_proc)
    elif isinstance(process, Restrict):
        name, body = process.session, process.body
        if name in taken:
            new_name = fresh_name(name, taken | free_names(body))
            body = rename_names(body, {name: new_name})
            name = new_name
        taken.add(name)
        layers.restricts.append((name, process.annotation))
        _collect(body, layers, taken, taken_proc)
    elif isinstance(process, Def):
        name, body, scope = process.name, process.body, process.scope
        if name in taken_proc:
            avoid = taken_proc | declared_proc_vars(process) | free_proc_vars(body) | free_proc_vars(scope)
            new_name = fresh_name(name, avoid)
            body = rename_proc_vars(body, {name: new_name})
            scope = rename_proc_vars(scope, {name: new_name})
            name = new_name
        taken_proc.add(name)
        layers.defs.append(Def(name, process.params, body, NIL))
        _collect(scope, layers, taken, taken_proc)
    else:
        layers.atoms.append(process)


def _fresh_names(prefix, count, avoid):
    names, index = [], 0
    while len(names) < count:
        candidate = f"{prefix}{index}"
        if candidate not in avoid:
            names.append(candidate)
        index += 1
    return names


def _normalize_under(term, holes):
    """Нормальная форма терма со связанными именами, временно заменёнными на holes"""
    normal = normal_form(rename_names(term, holes))
    return rename_names(normal, {hole: name for name, hole in holes.items()})


def _normalize_atom(atom):
    if isinstance(atom, Select):
        return Select(atom.chan, atom.partner, tuple(
            SelectBranch(b.prob, b.label, b.payload, normal_form(b.cont)) for b in atom.branches
        ))
    if isinstance(atom, Branch):
        (hole,) = _fresh_names("_b", 1, free_names(atom))
        return Branch(atom.chan, atom.partner, tuple(
            BranchArm(a.label, a.binder, _normalize_under(a.cont, {a.binder: hole}))
            for a in atom.branches
        ))
    return atom


def _normalize_def(definition):
    holes = _fresh_names("_p", len(definition.params), free_names(definition))
    body = _normalize_under(definition.body, dict(zip(definition.params, holes)))
    return Def(definition.name, definition.params, body, NIL)


def ordered_proc_vars(process):
    """Свободные процессные переменные в порядке первого вхождения"""
    order = []

    def visit(p, bound):
        if isinstance(p, Call):
            if p.name not in bound and p.name not in order:
                order.append(p.name)
        elif isinstance(p, Par):
            visit(p.left, bound)
            visit(p.right, bound)
        elif isinstance(p, Select):
            for b in p.branches:
                visit(b.cont, bound)
        elif isinstance(p, Branch):
            for a in p.branches:
                visit(a.cont, bound)
        elif isinstance(p, Restrict):
            visit(p.body, bound)
        elif isinstance(p, Def):
            visit(p.body, bound | {p.name})
            visit(p.scope, bound | {p.name})

    visit(process, frozenset())
    return order


def _drop_dead(layers):
    defs = layers.def_map()
    live, stack = set(), []
    for atom in layers.atoms:
        stack.extend(free_proc_vars(atom))
    while stack:
        name = stack.pop()
        if name in defs and name not in live:
            live.add(name)
            stack.extend(free_proc_vars(defs[name]))
    dead_defs = [d.name for d in layers.defs if d.name not in live]
    layers.defs = [d for d in layers.defs if d.name in live]

    used = set()
    for atom in layers.atoms:
        used |= free_names(atom)
    for definition in layers.defs:
        used |= free_names(definition)
    dead_names = [n for n, _ in layers.restricts if n not in used]
    layers.restricts = [(n, a) for n, a in layers.restricts if n in used]
    if dead_defs or dead_names:
        logger.debug("Удалены мёртвые определения %s и ограничения %s", dead_defs, dead_names)


def _def_chain(layers, order):
    """Определения в порядке от внешнего к внутреннему: вызываемые снаружи"""
    defs = layers.def_map()
    chain, visiting = [], set()

    def visit(name):
        if name in visiting or any(d.name == name for d in chain):
            return
        visiting.add(name)
        for callee in ordered_proc_vars(defs[name]):
            if callee in defs:
                visit(callee)
        chain.append(defs[name])

    for name in order:
        visit(name)
    return chain


def _structure(term):
    return str(structural_form(alpha_canonical(term)))


def _relabel(term, names, procs):
    """Переименование поднятых связывателей в компоненте или определении"""
    if isinstance(term, Def):
        renamed = rename_names(term, names) if names else term
        return Def(procs.get(term.name, term.name), renamed.params,
                   rename_proc_vars(renamed.body, procs), NIL)
    if names:
        term = rename_names(term, names)
    return rename_proc_vars(term, procs) if procs else term


def _settle(term):
    if isinstance(term, Def):
        return _normalize_def(term)
    return _normalize_atom(term)


def _key(term, names, procs):
    return _structure(_settle(_relabel(term, names, procs)))


def _rank(signatures):
    ranks = {s: i for i, s in enumerate(sorted(set(signatures.values())))}
    return {slot: ranks[s] for slot, s in signatures.items()}


def _outer_names(layers):
    """Свободные имена и процессные переменные слоёв без поднятых связывателей"""
    terms = list(layers.atoms) + list(layers.defs)
    names = set().union(*(free_names(t) for t in terms)) - {n for n, _ in layers.restricts}
    procs = set().union(*(free_proc_vars(t) for t in terms)) - {d.name for d in layers.defs}
    return names, procs


def _refine_colors(layers):
    """
    Раскраска поднятых связывателей, не зависящая от их имён и порядка компонент

    Цвет имени уточняется по ключам компонент и определений, в которых оно
    свободно, с подстановкой цветов остальных имён, пока число различных
    цветов растёт.
    """
    annotations = {n: repr(a) for n, a in layers.restricts}
    own_def = layers.def_map()
    terms = list(layers.atoms) + list(layers.defs)
    names_in = [free_names(t) for t in terms]
    procs_in = [free_proc_vars(t) | ({t.name} if isinstance(t, Def) else set()) for t in terms]
    outer_names, outer_procs = _outer_names(layers)
    size = len(annotations) + len(own_def) + 1
    *name_colors, name_self = _fresh_names("_c", size, outer_names)
    *proc_colors, proc_self = _fresh_names("_C", size, outer_procs)

    colors = _rank({
        **{("n", n): ("n", annotations[n]) for n in annotations},
        **{("p", p): ("p", "") for p in own_def},
    })
    while True:
        name_map = {n: name_colors[colors[("n", n)]] for n in annotations}
        proc_map = {p: proc_colors[colors[("p", p)]] for p in own_def}
        signatures = {}
        for n in annotations:
            marked = {**name_map, n: name_self}
            context = sorted(_key(t, marked, proc_map) for t, ns in zip(terms, names_in) if n in ns)
            signatures[("n", n)] = ("n", colors[("n", n)], annotations[n], tuple(context))
        for p in own_def:
            marked = {**proc_map, p: proc_self}
            context = sorted(_key(t, name_map, marked) for t, ps in zip(terms, procs_in) if p in ps)
            signatures[("p", p)] = ("p", colors[("p", p)], tuple(context))
        refined = _rank(signatures)
        if len(set(refined.values())) == len(set(colors.values())):
            return refined
        colors = refined


def _color_classes(colors, kind):
    """Имена вида kind, сгруппированные по цвету в порядке возрастания цвета"""
    members = sorted((c, slot[1]) for slot, c in colors.items() if slot[0] == kind)
    return [[name for _, name in group] for _, group in groupby(members, key=lambda m: m[0])]


def _arrange(layers, names, procs, holes):
    """Слои в порядке names/procs с поднятыми связывателями, заменёнными на holes"""
    name_holes, proc_holes = holes
    to_names, to_procs = dict(zip(names, name_holes)), dict(zip(procs, proc_holes))
    annotations = dict(layers.restricts)
    renamed = Layers(
        [(to_names[n], annotations[n]) for n in names],
        [_settle(_relabel(d, to_names, to_procs)) for d in layers.defs],
        [],
    )
    renamed.atoms = sorted((_settle(_relabel(a, to_names, to_procs)) for a in layers.atoms), key=_structure)
    renamed.defs = _def_chain(renamed, [to_procs[p] for p in procs])
    return renamed


def _restore(arranged, names, procs, holes):
    """Возвращает поднятым связывателям исходные имена"""
    name_holes, proc_holes = holes
    back_names, back_procs = dict(zip(name_holes, names)), dict(zip(proc_holes, procs))
    return Layers(
        [(back_names[h], a) for h, a in arranged.restricts],
        [_relabel(d, back_names, back_procs) for d in arranged.defs],
        [_relabel(a, back_names, back_procs) for a in arranged.atoms],
    )


def _canonical_layers(layers):
    """
    Канонический порядок ограничений, определений и компонент

    Перебираются порядки, согласованные с раскраской связывателей; из них
    выбирается порядок с наименьшим структурным ключом собранного процесса.
    """
    names = [n for n, _ in layers.restricts]
    procs = [d.name for d in layers.defs]
    outer_names, outer_procs = _outer_names(layers)
    holes = (_fresh_names(_RESTRICTED, len(names), outer_names),
             _fresh_names(_DEFINED, len(procs), outer_procs))
    if len(names) + len(procs) <= 1:
        return _restore(_arrange(layers, names, procs, holes), names, procs, holes)

    colors = _refine_colors(layers)
    name_classes = _color_classes(colors, "n")
    proc_classes = _color_classes(colors, "p")
    classes = name_classes + proc_classes
    count = prod(factorial(len(c)) for c in classes)
    if count > SEARCH_LIMIT:
        logger.warning("Симметричных порядков связывателей %d > %d, нормальная форма "
                       "может зависеть от порядка компонент", count, SEARCH_LIMIT)
        choices = [[tuple(c)] for c in classes]
    else:
        choices = [list(permutations(c)) for c in classes]

    best, best_key = None, None
    split = len(name_classes)
    for combination in product(*choices):
        order = ([n for group in combination[:split] for n in group],
                 [p for group in combination[split:] for p in group])
        key = _structure(_arrange(layers, *order, holes).assemble())
        if best_key is None or key < best_key:
            best, best_key = order, key
    return _restore(_arrange(layers, *best, holes), *best, holes)


def decompose(process):
    """
    Разбирает процесс в нормальной форме на слои

    Returns:
        Layers: Ограничения (имя, аннотация), определения, компоненты
    """
    layers = Layers()
    while isinstance(process, Restrict):
        layers.restricts.append((process.session, process.annotation))
        process = process.body
    while isinstance(process, Def):
        layers.defs.append(Def(process.name, process.params, process.body, NIL))
        process = process.scope
    while isinstance(process, Par):
        layers.atoms.append(process.left)
        process = process.right
    if not isinstance(process, Nil):
        layers.atoms.append(process)
    return layers


@lru_cache(maxsize=8192)
def normal_form(process):
    """
    Канонический представитель класса конгруэнтности

    Args:
        process (Process): Произвольный процесс

    Returns:
        Process: Цепочка ограничений, цепочка определений и упорядоченная
            параллельная композиция атомов (или Nil)
    """
    layers = Layers()
    _collect(process, layers, set(free_names(process)), set(free_proc_vars(process)))
    _drop_dead(layers)
    return _canonical_layers(layers).assemble()


def congruent(left, right):
    """True, если процессы структурно конгруэнтны"""
    return struct_equal(normal_form(left), normal_form(right))


def state_key(process):
    """
    Хешируемый ключ класса конгруэнтности

    Ключ строится по структуре канонического представителя, а не по его
    тексту: Var и SessionName с одинаковым именем дают разные ключи.
    """
    return _structure(normal_form(process))


# ---------------------------------------------------------------------------
# Однократные применения аксиом
# ---------------------------------------------------------------------------

def _def_free_names(definition):
    return free_names(Def(definition.name, definition.params, definition.body, NIL))


def _local_rewrites(term):
    if isinstance(term, Par):
        left, right = term.left, term.right
        yield "par-comm", Par(right, left)
        if isinstance(left, Par):
            yield "par-assoc", Par(left.left, Par(left.right, right))
        if isinstance(right, Par):
            yield "par-assoc", Par(Par(left, right.left), right.right)
        if isinstance(right, Nil):
            yield "par-unit", left
        if isinstance(left, Restrict) and left.session not in free_names(right):
            yield "new-extrude", Restrict(left.session, Par(left.body, right), left.annotation)
        if isinstance(left, Def) and left.name not in free_proc_vars(right):
            yield "def-extrude", Def(left.name, left.params, left.body, Par(left.scope, right))
    elif isinstance(term, Restrict):
        body = term.body
        if isinstance(body, Nil):
            yield "new-nil", NIL
        if isinstance(body, Restrict) and body.session != term.session:
            yield "new-swap", Restrict(body.session, Restrict(term.session, body.body, term.annotation),
                                       body.annotation)
        if isinstance(body, Par) and term.session not in free_names(body.right):
            yield "new-narrow", Par(Restrict(term.session, body.left, term.annotation), body.right)
        if isinstance(body, Def) and term.session not in _def_free_names(body):
            yield "new-def", Def(body.name, body.params, body.body,
                                 Restrict(term.session, body.scope, term.annotation))
    elif isinstance(term, Def):
        scope = term.scope
        if isinstance(scope, Nil):
            yield "def-nil", NIL
        if isinstance(scope, Restrict) and scope.session not in _def_free_names(term):
            yield "def-new", Restrict(scope.session, Def(term.name, term.params, term.body, scope.body),
                                      scope.annotation)
        if isinstance(scope, Par) and term.name not in free_proc_vars(scope.right):
            yield "def-narrow", Par(Def(term.name, term.params, term.body, scope.left), scope.right)
        if isinstance(scope, Def) and scope.name != term.name \
                and term.name not in free_proc_vars(scope.body) \
                and scope.name not in free_proc_vars(term.body):
            inner = Def(term.name, term.params, term.body, scope.scope)
            yield "def-swap", Def(scope.name, scope.params, scope.body, inner)


def _rewrites_at(term):
    yield from _local_rewrites(term)
    if isinstance(term, Par):
        for name, left in _rewrites_at(term.left):
            yield name, Par(left, term.right)
        for name, right in _rewrites_at(term.right):
            yield name, Par(term.left, right)
    elif isinstance(term, Restrict):
        for name, body in _rewrites_at(term.body):
            yield name, Restrict(term.session, body, term.annotation)
    elif isinstance(term, Def):
        for name, scope in _rewrites_at(term.scope):
            yield name, Def(term.name, term.params, term.body, scope)


def axiom_rewrites(process):
    """
    Все однократные применения аксиом конгруэнтности вне префиксов

    Returns:
        list[tuple[str, Process]]: Пары (имя аксиомы, переписанный процесс)
    """
    rewrites = [("par-unit", Par(process, NIL))]
    rewrites.extend(_rewrites_at(process))
    return rewrites

"""
Разбор текстов процессов и типов в абстрактный синтаксис

Разбор выполняется в два прохода: LALR-разбор с построением AST и проход
разрешения имён. Голый идентификатор в позиции значения становится
переменной (Var), если он связан ветвлением или параметром определения,
именем сессии (SessionName), если связан ограничением new, и строкой (Str),
если свободен.
"""

import json
from pathlib import Path

from lark import Transformer, v_args
from lark.exceptions import UnexpectedInput, VisitError

from ..calculus.prob import Interval, to_prob
from ..calculus.process import (
    Bool, Branch, BranchArm, Call, Def, Int, NIL, Par, Restrict, Select, SelectBranch,
    SessionName, SessionRole, Str, Var, par,
)
from ..errors import (
    BadInterval, EmptyChoice, InvalidProbability, SourceError, SourceLoadError, SourceSyntaxError,
)
from ..typesys.types import (
    END, BranchT, GBranch, Interaction, LBranch, LSelect, Rec, SelectT, Sort, TVar,
    check_type_term,
)
from .grammar import parser as _lalr
from .source import read_source


@v_args(inline=True)
class TermBuilder(Transformer):
    """Строит процессы и типы из дерева разбора"""

    def __init__(self, base_dir=None):
        super().__init__()
        self.base_dir = Path(base_dir) if base_dir is not None else Path.cwd()

    # --- файлы ---
    def process_file(self, process):
        return process

    def gtype_file(self, gtype):
        return gtype

    def ltype_file(self, ltype):
        return ltype

    # --- процессы ---
    def process(self, *prefixes):
        return par(*prefixes)

    def nil(self):
        return NIL

    def chan_head(self, name, first, second=None):
        if second is None:
            return Var(str(name)), str(first)
        return SessionRole(str(name), str(first)), str(second)

    def select(self, head, branches=None):
        if branches is None:
            raise EmptyChoice()
        chan, partner = head
        return Select(chan, partner, branches)

    def sel_branches(self, *branches):
        return tuple(branches)

    def sel_branch(self, prob, label, payload, cont):
        return SelectBranch(to_prob(str(prob)), str(label), payload, cont)

    def branch(self, head, arms=None):
        if arms is None:
            raise EmptyChoice()
        chan, partner = head
        return Branch(chan, partner, arms)

    def arms(self, *arms):
        return tuple(arms)

    def arm(self, label, binder, cont):
        return BranchArm(str(label), str(binder), cont)

    def restrict(self, session, *rest):
        annotation = rest[0] if len(rest) == 2 else None
        return Restrict(str(session), rest[-1], annotation)

    def file_annotation(self, path_token):
        relative = json.loads(str(path_token))
        return load_global_type_file(self.base_dir / relative)

    def inline_annotation(self, gtype):
        return check_type_term(gtype)

    def define(self, name, *rest):
        params = rest[0] if len(rest) == 3 else ()
        body, scope = rest[-2], rest[-1]
        return Def(str(name), params, body, scope)

    def params(self, *names):
        return tuple(str(n) for n in names)

    def call(self, name, args=()):
        return Call(str(name), args)

    def args(self, *terms):
        return tuple(terms)

    def name_term(self, name):
        return Var(str(name))

    def role_term(self, session, role):
        return SessionRole(str(session), str(role))

    def int_term(self, token):
        return Int(int(token))

    def true_term(self):
        return Bool(True)

    def false_term(self):
        return Bool(False)

    def str_term(self, token):
        return Str(json.loads(str(token)))

    # --- типы ---
    def g_end(self):
        return END

    def l_end(self):
        return END

    def g_rec(self, name, body):
        return Rec(str(name), body)

    def l_rec(self, name, body):
        return Rec(str(name), body)

    def g_var(self, name):
        return TVar(str(name))

    def l_var(self, name):
        return TVar(str(name))

    def g_interaction(self, sender, receiver, branches=None):
        if branches is None:
            raise EmptyChoice()
        return Interaction(str(sender), str(receiver), branches)

    def g_branches(self, *branches):
        return tuple(branches)

    def g_branch(self, delta, label, sort, cont):
        return GBranch(delta, str(label), Sort.parse(str(sort)), cont)

    def range_interval(self, lower, upper):
        try:
            return Interval(to_prob(str(lower)), to_prob(str(upper)))
        except InvalidProbability:
            raise BadInterval(str(lower), str(upper)) from None

    def point_interval(self, prob):
        try:
            return Interval.point(to_prob(str(prob)))
        except InvalidProbability:
            raise BadInterval(str(prob), str(prob)) from None

    def l_select(self, partner, selections=None):
        if selections is None:
            raise EmptyChoice()
        return SelectT(str(partner), selections)

    def l_selections(self, *items):
        return tuple(items)

    def l_selection(self, *items):
        delta = items[0] if len(items) == 4 else None
        label, sort, cont = items[-3:]
        return LSelect(delta, str(label), Sort.parse(str(sort)), cont)

    def l_branch(self, partner, arms=None):
        if arms is None:
            raise EmptyChoice()
        return BranchT(str(partner), arms)

    def l_arms(self, *items):
        return tuple(items)

    def l_arm(self, label, sort, cont):
        return LBranch(str(label), Sort.parse(str(sort)), cont)


# ---------------------------------------------------------------------------
# Разрешение имён
# ---------------------------------------------------------------------------

def _resolve_term(term, scope):
    if isinstance(term, Var):
        kind = scope.get(term.name)
        if kind == "var":
            return term
        if kind == "session":
            return SessionName(term.name)
        return Str(term.name)
    return term


def resolve_names(process, scope=None):
    """
    Разрешает голые идентификаторы в позициях значений

    Args:
        process (Process): Процесс сразу после разбора
        scope (dict): Имя -> "var" | "session" для объемлющих связывателей
    """
    scope = scope or {}
    if isinstance(process, Par):
        return Par(resolve_names(process.left, scope), resolve_names(process.right, scope))
    if isinstance(process, Select):
        return Select(process.chan, process.partner, tuple(
            SelectBranch(b.prob, b.label, _resolve_term(b.payload, scope), resolve_names(b.cont, scope))
            for b in process.branches
        ))
    if isinstance(process, Branch):
        return Branch(process.chan, process.partner, tuple(
            BranchArm(a.label, a.binder, resolve_names(a.cont, {**scope, a.binder: "var"}))
            for a in process.branches
        ))
    if isinstance(process, Restrict):
        body = resolve_names(process.body, {**scope, process.session: "session"})
        return Restrict(process.session, body, process.annotation)
    if isinstance(process, Def):
        inner = {**scope, **{p: "var" for p in process.params}}
        return Def(process.name, process.params, resolve_names(process.body, inner),
                   resolve_names(process.scope, scope))
    if isinstance(process, Call):
        return Call(process.name, tuple(_resolve_term(a, scope) for a in process.args))
    return process


# ---------------------------------------------------------------------------
# Точки входа
# ---------------------------------------------------------------------------

def _describe_terminal(name):
    try:
        terminal = _lalr.get_terminal(name)
    except KeyError:
        return name
    if terminal.pattern.type == "str":
        return repr(terminal.pattern.value)
    return name


def _parse(text, start, base_dir=None, source=None):
    try:
        tree = _lalr.parse(text, start=start)
    except UnexpectedInput as error:
        expected = getattr(error, "expected", None) or getattr(error, "allowed", None) or ()
        raise SourceSyntaxError(
            error.line, error.column, [_describe_terminal(e) for e in expected], source
        ) from None
    try:
        return TermBuilder(base_dir).transform(tree)
    except VisitError as error:
        if isinstance(error.orig_exc, (SourceError, SourceLoadError)):
            raise error.orig_exc from None
        raise


def parse_process(text, base_dir=None, source=None):
    """
    Разбирает текст процесса

    Args:
        text (str): Текст в синтаксисе .mps
        base_dir (str | Path): Каталог, от которого отсчитываются пути аннотаций
        source (str): Имя источника для сообщений об ошибках

    Returns:
        Process: Дерево процесса

    Raises:
        SourceSyntaxError: При синтаксической ошибке (строка, столбец, ожидаемое)
        DuplicateLabel, EmptyChoice: При нарушении инвариантов выбора
    """
    return resolve_names(_parse(text, "process_file", base_dir, source))


def parse_global_type(text, source=None):
    """
    Разбирает текст глобального типа

    Raises:
        UnboundTypeVar, UnguardedRecursion, BadInterval, SourceSyntaxError
    """
    return check_type_term(_parse(text, "gtype_file", source=source))


def parse_local_type(text, source=None):
    """Разбирает текст локального типа (формат pretty_print)"""
    return check_type_term(_parse(text, "ltype_file", source=source))


def load_global_type_file(path):
    """Читает и разбирает файл .gty, на который ссылается аннотация"""
    return parse_global_type(read_source(path, ".gty"), source=str(path))

"""
Командная строка probsession

Коды возврата: 0 - все вердикты положительны, 1 - хотя бы один вердикт
отрицателен, 2 - ошибка использования, чтения или разбора входных файлов.
Отчёт печатается в стандартный вывод, диагностика - в стандартный поток ошибок.
"""

import argparse
import logging
import sys
from fractions import Fraction
from pathlib import Path

from .analysis import (
    NOT_COMPUTED, enumerate_paths, reach, simulate, total_probability,
)
from .checker import (
    EMPTY_SORTING, EMPTY_TYPING, MODES, SUBSET, TypeChecker, check_deadlock_freedom,
    explore_stuck_states, reannotate, verify_equivalence_preservation, verify_intersection,
    verify_lemma_properties, verify_subject_reduction,
)
from .config import AnalysisConfig
from .dynamics import enabled_steps, find_redexes, normal_form
from .errors import (
    AnalysisError, ProjectionUndefined, SessionError, SubstitutionError, TypeCheckError,
)
from .fixtures import CORPUS, FIXTURE_DIR, load_fixture, load_variants
from .loaders import GtyReader, MpsReader, pretty_print
from .report import (
    CommandReport, audit_record, error_record, harness_record, path_record, rational,
    rational_cell, reach_record, step_record, typing_record, wf_record,
)
from .typesys import pid, project, well_formed

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

REACH_SUM_DEPTHS = range(1, 7)
VERIFY_DEPTH = 5
VERIFY_BOUND = 200


# ---------------------------------------------------------------------------
# Входные файлы
# ---------------------------------------------------------------------------

def resolve_input(path):
    """
    Путь к входному файлу; несуществующие пути ищутся среди примеров пакета

    "fixtures/x.mps" и "x.mps" находят probsession/fixtures/x.mps из любого
    рабочего каталога.
    """
    path = Path(path)
    if path.exists():
        return path
    for candidate in (FIXTURE_DIR.parent / path, FIXTURE_DIR / path.name):
        if candidate.exists():
            logger.debug("%s найден как %s", path, candidate)
            return candidate
    return path


def load_process(path, annotations=()):
    process = MpsReader().read(resolve_input(path))
    for session, gty in annotations:
        process = reannotate(process, session, load_global_type(gty))
    return process


def load_global_type(path):
    return GtyReader().read(resolve_input(path))


def _annotation(text):
    session, sep, path = text.partition("=")
    if not sep or not session or not path:
        raise argparse.ArgumentTypeError(f"ожидалось SESSION=FILE.gty: {text!r}")
    return session.strip(), path.strip()


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"ожидалось положительное целое: {text}")
    return value


# ---------------------------------------------------------------------------
# Команды
# ---------------------------------------------------------------------------

def cmd_parse(args, config):
    report = CommandReport("parse")
    path = Path(args.file)
    if path.suffix.lower() == ".gty":
        term = load_global_type(path)
        report.fields["kind"] = "global-type"
        report.fields["term"] = pretty_print(term)
        report.line(pretty_print(term))
        return report
    process = load_process(path)
    normal = normal_form(process)
    report.fields.update(kind="process", term=pretty_print(process), normal_form=pretty_print(normal))
    report.line(pretty_print(process))
    report.line(f"нормальная форма: {pretty_print(normal)}")
    return report


def cmd_wf(args, config):
    report = CommandReport("wf")
    result = well_formed(load_global_type(args.file))
    report.fields.update(wf_record(result))
    if not result.ok:
        report.fail()
    for role, local in result.per_role.items():
        report.line(f"{role}: {local if isinstance(local, Exception) else pretty_print(local)}")
    for issue in result.bad_interval_sets:
        deltas = ", ".join(str(d) for d in issue.deltas)
        report.line(
            f"{issue.sender} -> {issue.receiver} @ {issue.location()}: {{{deltas}}} "
            f"proper={issue.proper} reachable={issue.reachable}"
        )
    return report


def cmd_project(args, config):
    report = CommandReport("project")
    global_type = load_global_type(args.file)
    roles = [args.role] if args.role else sorted(pid(global_type))
    projections = {}
    for role in roles:
        local = pretty_print(project(global_type, role))
        projections[role] = local
        report.line(f"{role}: {local}")
    report.fields["projections"] = projections
    return report


def cmd_check(args, config):
    report = CommandReport("check")
    process = load_process(args.file, args.annotate or ())
    checker = TypeChecker(args.mode)
    try:
        checker.check(EMPTY_SORTING, process, EMPTY_TYPING)
    except TypeCheckError as error:
        report.fail()
        report.fields["error"] = error_record(error, args.file)
        report.line(f"ошибка типизации: {error}")
        return report
    sessions = {name: typing_record(typing) for name, typing in checker.session_typings.items()}
    report.fields.update(mode=args.mode, residual=typing_record(EMPTY_TYPING), sessions=sessions)
    for name, typing in checker.session_typings.items():
        report.line(f"{name}: {typing}")
    report.line(f"остаток: {EMPTY_TYPING}")
    return report


def cmd_step(args, config):
    report = CommandReport("step")
    process = load_process(args.file)
    scan = find_redexes(process)
    steps = enabled_steps(process)
    report.fields.update(
        next_proc=len(scan.redexes),
        steps=[step_record(s) for s in steps],
        mismatches=[str(m) for m in scan.mismatches],
    )
    report.line(f"next_proc = {len(scan.redexes)}")
    for step in steps:
        report.line(f"{str(step.label):<24}{rational_cell(step.prob)}  {pretty_print(step.target)}")
    for mismatch in scan.mismatches:
        report.line(f"несовпадение: {mismatch}")
    return report


def cmd_reach(args, config):
    report = CommandReport("reach")
    process = load_process(args.file)
    entries = reach(process, args.k, config)
    total = sum((e.mass for e in entries), Fraction(0)) if entries else NOT_COMPUTED
    report.fields.update(k=args.k, entries=[reach_record(e) for e in entries])
    report.fields["total"] = rational(total) if entries else None
    for entry in entries:
        marker = " (поглощающее)" if entry.absorbed else ""
        report.line(f"{rational_cell(entry.mass)}  {pretty_print(entry.state)}{marker}")
    if entries:
        report.line(f"сумма: {rational_cell(total)}")
        if total != 1:
            report.fail()
    else:
        report.line(f"сумма: {NOT_COMPUTED}")
    return report


def cmd_paths(args, config):
    report = CommandReport("paths")
    paths = enumerate_paths(load_process(args.file), args.depth, config)
    report.fields.update(depth=args.depth, paths=[path_record(p) for p in paths])
    for path in paths:
        labels = " ".join(str(l) for l in path.labels) or "<пусто>"
        report.line(f"{rational_cell(path.probability)}  {labels}")
    return report


def cmd_simulate(args, config):
    report = CommandReport("simulate")
    process = load_process(args.file)
    global_type = load_global_type(args.global_type) if args.global_type else None
    result = simulate(process, args.trials, args.seed, global_type, config)
    report.fields.update(
        trials=result.trials,
        seed=result.seed,
        truncated=result.truncated,
        label_freq=[
            {"depth": depth, "label": str(label), "freq": rational(freq)}
            for (depth, label), freq in result.label_freq.items()
        ],
        audit=[audit_record(e) for e in result.audit],
    )
    if not result.ok:
        report.fail()
    report.line(f"трасс: {result.trials}, зерно: {result.seed}, оборвано: {result.truncated}")
    for (depth, label), freq in result.label_freq.items():
        report.line(f"{depth:>3} {str(label):<24}{rational_cell(freq)}")
    for entry in result.audit:
        verdict = "ok" if entry.passed and entry.interval_passed is not False else "FAIL"
        interval = f" δ={entry.interval}" if entry.interval is not None else ""
        report.line(
            f"[{verdict}] {entry.label} при {entry.visits} посещениях: "
            f"{rational(entry.empirical)} против {rational(entry.declared)} "
            f"± {float(entry.margin):.4f}{interval}"
        )
    return report


def _record_harness(report, fixture, harness):
    report.fields.setdefault("results", []).append(dict(harness_record(harness), fixture=fixture))
    reason = f" ({harness.reason})" if harness.reason else ""
    report.line(f"{fixture:<20}{harness.name:<28}{harness.status:<16}{harness.checked:>6}{reason}")
    for violation in harness.violations:
        report.line(f"    {violation.kind}: {violation.message} @ {violation.trace_text()}")
    if harness.status == "fail":
        report.fail()


def _reach_sum_sweep(report, name, process, config):
    sums = []
    for k in REACH_SUM_DEPTHS:
        total = total_probability(process, k, config)
        sums.append(None if total is NOT_COMPUTED else rational(total))
        if total is not NOT_COMPUTED and total != 1:
            report.fail()
            report.line(f"{name:<20}Reach_{k}: сумма {rational(total)} != 1")
    report.fields.setdefault("reach_sums", {})[name] = sums
    report.line(f"{name:<20}{'reach-sum':<28}{', '.join(s or '-' for s in sums)}")


def cmd_verify(args, config):
    report = CommandReport("verify")
    entries = [e for e in CORPUS if not args.fixture or e.name in args.fixture]
    typed = []
    for entry in entries:
        process = load_fixture(entry)
        if entry.expect_deadlock:
            exploration = explore_stuck_states(process, args.bound)
            found = bool(exploration.stuck)
            report.fields.setdefault("stuck_demos", {})[entry.name] = len(exploration.stuck)
            report.line(f"{entry.name:<20}{'stuck-state-demo':<28}{'pass' if found else 'fail':<16}"
                        f"{exploration.states:>6}")
            if not found:
                report.fail()
            continue
        _reach_sum_sweep(report, entry.name, process, config)
        if not entry.typed:
            continue
        typed.append((entry.name, process))
        _record_harness(report, entry.name,
                        verify_subject_reduction(EMPTY_SORTING, process, args.depth, args.mode))
        _record_harness(report, entry.name, check_deadlock_freedom(process, args.bound, args.mode))
        _record_harness(report, entry.name,
                        verify_equivalence_preservation(EMPTY_SORTING, process, args.mode))
        if entry.variants:
            _record_harness(report, entry.name, verify_intersection(
                EMPTY_SORTING, process, entry.session, load_variants(entry), args.mode))
    if typed:
        _record_harness(report, "corpus", verify_lemma_properties(typed, args.mode))
    return report


COMMANDS = {
    "parse": cmd_parse,
    "wf": cmd_wf,
    "project": cmd_project,
    "check": cmd_check,
    "step": cmd_step,
    "reach": cmd_reach,
    "paths": cmd_paths,
    "simulate": cmd_simulate,
    "verify": cmd_verify,
}


# ---------------------------------------------------------------------------
# Разбор аргументов
# ---------------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v: INFO, -vv: DEBUG")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--explosion-cap", type=_positive, default=None)

    parser = argparse.ArgumentParser(
        prog="probsession",
        description="Вероятностные многосторонние сессии с неточными вероятностями",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    p = sub.add_parser("parse", parents=[common], help="разобрать и напечатать .mps/.gty")
    p.add_argument("file")

    p = sub.add_parser("wf", parents=[common], help="корректность глобального типа")
    p.add_argument("file")

    p = sub.add_parser("project", parents=[common], help="проекция глобального типа на роль")
    p.add_argument("file")
    p.add_argument("--role")

    p = sub.add_parser("check", parents=[common], help="проверка типов процесса")
    p.add_argument("file")
    p.add_argument("--mode", choices=MODES, default=SUBSET)
    p.add_argument("--annotate", type=_annotation, action="append", metavar="SESSION=FILE.gty")

    p = sub.add_parser("step", parents=[common], help="переходы за один шаг")
    p.add_argument("file")

    p = sub.add_parser("reach", parents=[common], help="множество достижимости за k шагов")
    p.add_argument("file")
    p.add_argument("-k", type=_positive, default=1)

    p = sub.add_parser("paths", parents=[common], help="пути эволюции")
    p.add_argument("file")
    p.add_argument("--depth", type=_positive, default=3)

    p = sub.add_parser("simulate", parents=[common], help="моделирование Монте-Карло")
    p.add_argument("file")
    p.add_argument("-n", "--trials", type=_positive, default=10_000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--global-type", metavar="FILE.gty")

    p = sub.add_parser("verify", parents=[common], help="проверка свойств на корпусе примеров")
    p.add_argument("fixture", nargs="*", help="имена примеров (по умолчанию все)")
    p.add_argument("--mode", choices=MODES, default=SUBSET)
    p.add_argument("--depth", type=_positive, default=VERIFY_DEPTH)
    p.add_argument("--bound", type=_positive, default=VERIFY_BOUND)
    return parser


def configure_logging(verbosity):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")


def run(argv=None):
    """
    Выполняет команду и печатает отчёт

    Args:
        argv (list[str]): Аргументы без имени программы (по умолчанию sys.argv[1:])

    Returns:
        int: Код возврата 0 / 1 / 2
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return exit_.code if isinstance(exit_.code, int) else EXIT_USAGE
    configure_logging(args.verbose)

    try:
        config = AnalysisConfig.from_env().with_overrides(explosion_cap=args.explosion_cap)
        report = COMMANDS[args.command](args, config)
    except (AnalysisError, ProjectionUndefined, SubstitutionError, TypeCheckError) as error:
        report = CommandReport(args.command, ok=False)
        report.fields["error"] = error_record(error, getattr(args, "file", None))
        report.line(f"ошибка: {error}")
    except SessionError as error:
        record = error_record(error, getattr(args, "file", None))
        print(f"probsession {args.command}: {error}", file=sys.stderr)
        if args.format == "json":
            print(CommandReport(args.command, ok=False, fields={"error": record}).to_json())
        return EXIT_USAGE

    print(report.render(args.format))
    return EXIT_OK if report.ok else EXIT_FAILED


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

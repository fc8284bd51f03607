"""
ProtocolDocument - загруженный процесс или глобальный тип

Документ хранит терм и выполняет над ним анализы, результаты которых
обозреватель показывает в центральной панели. Каждый анализ возвращает
CommandReport, тот же, что печатает командная строка.
"""

import logging
from fractions import Fraction
from pathlib import Path

from ..analysis import reach, simulate
from ..calculus.binders import check_probability_complete, free_channels
from ..checker import EMPTY_SORTING, EMPTY_TYPING, SUBSET, TypeChecker
from ..dynamics import enabled_steps, find_redexes
from ..errors import SessionError, TypeCheckError
from ..loaders import GtyReader, MpsReader, pretty_print
from ..report import CommandReport, rational, rational_cell
from ..typesys import pid, project, well_formed

logger = logging.getLogger(__name__)

PROCESS = "process"
GLOBAL_TYPE = "global-type"


class ProtocolDocument:
    """
    Документ обозревателя

    Attributes:
        name (str): Имя документа (имя файла без расширения)
        term (Process | GlobalType): Содержимое
        kind (str): PROCESS или GLOBAL_TYPE
        source (Path | None): Файл, из которого документ загружен
    """

    def __init__(self, term, kind, name="Документ", source=None):
        if kind not in (PROCESS, GLOBAL_TYPE):
            raise ValueError(f"Неизвестный вид документа: {kind}")
        self.term = term
        self.kind = kind
        self.name = name
        self.source = Path(source) if source is not None else None

    @classmethod
    def from_file(cls, filepath):
        """
        Загружает документ из файла .mps или .gty

        Raises:
            SourceLoadError: Если файл не найден или имеет другое расширение
            SourceError: Если текст содержит ошибку
        """
        path = Path(filepath)
        if path.suffix.lower() == ".gty":
            return cls(GtyReader().read(path), GLOBAL_TYPE, path.stem, path)
        return cls(MpsReader().read(path), PROCESS, path.stem, path)

    @property
    def is_process(self):
        return self.kind == PROCESS

    def text(self):
        return pretty_print(self.term)

    def roles(self):
        return [] if self.is_process else sorted(pid(self.term))

    def validate(self):
        """
        Проверяет документ

        Процесс должен быть вероятностно полным, глобальный тип - корректным.

        Returns:
            tuple: (is_valid, message)
        """
        if self.is_process:
            violations = check_probability_complete(self.term)
            if violations:
                return False, "Вероятности выбора не дают 1: " + "; ".join(str(v) for v in violations)
            open_channels = free_channels(self.term)
            if open_channels:
                names = ", ".join(sorted(str(c) for c in open_channels))
                return True, f"Процесс открыт, свободные каналы: {names}"
            return True, "Процесс вероятностно полон"
        result = well_formed(self.term)
        if result.ok:
            return True, "Глобальный тип корректен"
        if result.undefined_roles():
            return False, "Проекция не определена для ролей: " + ", ".join(result.undefined_roles())
        return False, f"Недостижимых наборов интервалов: {len(result.bad_interval_sets)}"

    # --- анализы ---
    def _require(self, kind, command):
        if self.kind != kind:
            raise ValueError(f"Команда {command} неприменима к документу вида {self.kind}")

    def well_formedness(self):
        self._require(GLOBAL_TYPE, "wf")
        report = CommandReport("wf")
        result = well_formed(self.term)
        if not result.ok:
            report.fail()
        for issue in result.bad_interval_sets:
            deltas = ", ".join(str(d) for d in issue.deltas)
            report.line(f"{issue.sender} -> {issue.receiver} @ {issue.location()}: {{{deltas}}} "
                        f"proper={issue.proper} reachable={issue.reachable}")
        for role in result.undefined_roles():
            report.line(f"{role}: {result.per_role[role]}")
        return report

    def projection(self, role):
        self._require(GLOBAL_TYPE, "project")
        report = CommandReport("project")
        try:
            report.line(f"{role}: {pretty_print(project(self.term, role))}")
        except SessionError as error:
            report.fail()
            report.line(f"{role}: {error}")
        return report

    def type_check(self, mode=SUBSET):
        self._require(PROCESS, "check")
        report = CommandReport("check")
        checker = TypeChecker(mode)
        try:
            checker.check(EMPTY_SORTING, self.term, EMPTY_TYPING)
        except TypeCheckError as error:
            report.fail()
            report.line(f"ошибка типизации: {error}")
            return report
        for name, typing in checker.session_typings.items():
            report.line(f"{name}: {typing}")
        return report

    def successors(self):
        self._require(PROCESS, "step")
        report = CommandReport("step")
        scan = find_redexes(self.term)
        report.line(f"next_proc = {len(scan.redexes)}")
        for step in enabled_steps(self.term):
            report.line(f"{str(step.label):<24}{rational_cell(step.prob)}  {pretty_print(step.target)}")
        for mismatch in scan.mismatches:
            report.line(f"несовпадение: {mismatch}")
        return report

    def reach(self, k, config=None):
        self._require(PROCESS, "reach")
        report = CommandReport("reach")
        entries = reach(self.term, k, config)
        for entry in entries:
            report.line(f"{rational_cell(entry.mass)}  {pretty_print(entry.state)}")
        if entries:
            total = sum((e.mass for e in entries), Fraction(0))
            report.line(f"сумма: {rational(total)}")
            if total != 1:
                report.fail()
        return report

    def simulate(self, trials, seed, global_type=None, config=None):
        self._require(PROCESS, "simulate")
        report = CommandReport("simulate")
        result = simulate(self.term, trials, seed, global_type, config)
        if not result.ok:
            report.fail()
        for (depth, label), freq in result.label_freq.items():
            report.line(f"{depth:>3} {str(label):<24}{rational_cell(freq)}")
        failed = [e for e in result.audit if not e.passed or e.interval_passed is False]
        report.line(f"проверено переходов: {len(result.audit)}, не прошло: {len(failed)}")
        return report

    def __str__(self):
        return f"ProtocolDocument(name='{self.name}', kind={self.kind})"

    def __repr__(self):
        return self.__str__()

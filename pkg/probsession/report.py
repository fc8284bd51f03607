"""
Отчёты командной строки: текстовый и JSON

Вероятности в JSON записываются точными дробями "num/den"; в тексте рядом
с дробью печатается десятичное приближение.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List

from .calculus.prob import Interval, format_prob
from .errors import SourceSyntaxError, TypeCheckError
from .loaders.printer import pretty_print

SCHEMA_VERSION = 1


def rational(value):
    return format_prob(value)


def rational_cell(value, width=12):
    """Дробь и её десятичное приближение для текстовых таблиц"""
    value = Fraction(value)
    return f"{rational(value):>{width}}  ≈ {float(value):.6f}"


def interval_record(delta):
    return [rational(delta.lower), rational(delta.upper)]


def _encode(value):
    if isinstance(value, Fraction):
        return rational(value)
    if isinstance(value, Interval):
        return interval_record(value)
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    return str(value)


def canonical_json(payload):
    return json.dumps(payload, default=_encode, ensure_ascii=False, indent=2, sort_keys=True)


@dataclass
class CommandReport:
    """
    Результат одной команды

    Attributes:
        command (str): Имя команды
        ok (bool): Все вердикты положительны
        fields (dict): Поля JSON-отчёта, специфичные для команды
        lines (list[str]): Строки текстового отчёта
    """
    command: str
    ok: bool = True
    fields: dict = field(default_factory=dict)
    lines: List[str] = field(default_factory=list)

    def line(self, text=""):
        self.lines.append(text)

    def fail(self):
        self.ok = False

    def to_json(self):
        payload = {"command": self.command, "ok": self.ok, "schema": SCHEMA_VERSION}
        payload.update(self.fields)
        return canonical_json(payload)

    def to_text(self):
        verdict = "OK" if self.ok else "FAIL"
        return "\n".join(self.lines + [f"{self.command}: {verdict}"])

    def render(self, fmt):
        return self.to_json() if fmt == "json" else self.to_text()


# ---------------------------------------------------------------------------
# Записи для JSON
# ---------------------------------------------------------------------------

def step_record(step):
    return {"label": str(step.label), "prob": rational(step.prob), "target": pretty_print(step.target)}


def reach_record(entry):
    return {
        "state": pretty_print(entry.state),
        "mass": rational(entry.mass),
        "absorbed": entry.absorbed,
    }


def path_record(path):
    return {
        "labels": [str(label) for label in path.labels],
        "prob": rational(path.probability),
        "final": pretty_print(path.final_state),
    }


def issue_record(issue):
    return {
        "location": issue.location(),
        "sender": issue.sender,
        "receiver": issue.receiver,
        "deltas": [interval_record(d) for d in issue.deltas],
        "proper": issue.proper,
        "reachable": issue.reachable,
    }


def wf_record(report):
    per_role = {
        role: (pretty_print(local) if not isinstance(local, Exception) else {"undefined": str(local)})
        for role, local in report.per_role.items()
    }
    return {
        "well_formed": report.ok,
        "projections": per_role,
        "bad_interval_sets": [issue_record(i) for i in report.bad_interval_sets],
    }


def typing_record(typing):
    return {str(channel): pretty_print(local) for channel, local in typing.items()}


def violation_record(violation):
    return {
        "kind": violation.kind,
        "message": violation.message,
        "trace": [str(label) for label in violation.trace],
        "state": violation.state,
    }


def harness_record(report):
    return {
        "name": report.name,
        "status": report.status,
        "checked": report.checked,
        "reason": report.reason,
        "violations": [violation_record(v) for v in report.violations],
    }


def audit_record(entry):
    record = {
        "state": entry.state,
        "depth": entry.depth,
        "label": str(entry.label),
        "declared": rational(entry.declared),
        "empirical": rational(entry.empirical),
        "visits": entry.visits,
        "margin": rational(entry.margin),
        "passed": entry.passed,
    }
    if entry.interval is not None:
        record["interval"] = interval_record(entry.interval)
        record["interval_passed"] = entry.interval_passed
    return record


def error_record(error, source=None):
    """Описание ошибки предметной области с координатами, если они известны"""
    record = {"error": type(error).__name__, "message": str(error)}
    if source is not None:
        record["file"] = str(source)
    if isinstance(error, SourceSyntaxError):
        record.update(line=error.line, col=error.col, expected=list(error.expected))
        if error.source:
            record["file"] = error.source
    if isinstance(error, TypeCheckError):
        record["rule_path"] = list(error.path)
    return record

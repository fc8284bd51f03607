"""
Иерархия исключений probsession

Все ошибки пакета наследуются от SessionError. Ошибки исходного текста
дополнительно наследуются от ValueError, ошибки загрузки файлов - от IOError,
чтобы вызывающий код, перехватывающий стандартные исключения, продолжал работать.
"""


class SessionError(Exception):
    """Базовое исключение пакета"""


class ConfigError(SessionError, ValueError):
    """Неверное значение параметра конфигурации"""


# ---------------------------------------------------------------------------
# Исходный текст
# ---------------------------------------------------------------------------

class SourceError(SessionError, ValueError):
    """Ошибка в исходном тексте процесса или типа"""


class SourceSyntaxError(SourceError):
    """
    Синтаксическая ошибка с координатами

    Attributes:
        line (int): Номер строки (с 1)
        col (int): Номер столбца (с 1)
        expected (tuple): Ожидавшиеся лексемы
    """

    def __init__(self, line, col, expected=(), source=None):
        self.line = line
        self.col = col
        self.expected = tuple(sorted(expected))
        self.source = source
        where = f"{source}:" if source else ""
        hint = f"; ожидалось: {', '.join(self.expected)}" if self.expected else ""
        super().__init__(f"{where}{line}:{col}: синтаксическая ошибка{hint}")


class DuplicateLabel(SourceError):
    def __init__(self, label):
        self.label = label
        super().__init__(f"Метка повторяется в выборе: {label}")


class EmptyChoice(SourceError):
    def __init__(self):
        super().__init__("Выбор должен содержать хотя бы одну ветвь")


class UnboundTypeVar(SourceError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"Несвязанная переменная типа: {name}")


class UnguardedRecursion(SourceError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"Рекурсия по {name} не защищена префиксом")


class BadInterval(SourceError):
    def __init__(self, lower, upper):
        self.lower = lower
        self.upper = upper
        super().__init__(f"Неверный интервал [{lower}, {upper}]")


class InvalidProbability(SourceError):
    def __init__(self, value):
        self.value = value
        super().__init__(f"Вероятность вне [0, 1]: {value}")


class SourceLoadError(SessionError, IOError):
    """Файл не удалось прочитать"""

    def __init__(self, path, reason):
        self.path = path
        super().__init__(f"Ошибка чтения файла {path}: {reason}")


# ---------------------------------------------------------------------------
# Подстановка
# ---------------------------------------------------------------------------

class SubstitutionError(SessionError):
    """Подстановка не может быть выполнена"""


class ArityMismatch(SubstitutionError):
    def __init__(self, name, expected, got, path=()):
        self.name = name
        self.expected = expected
        self.got = got
        self.path = tuple(path)
        super().__init__(f"{name}: ожидалось аргументов {expected}, передано {got}")


class IllFormedSubstitution(SubstitutionError):
    def __init__(self, name, replacement):
        self.name = name
        self.replacement = replacement
        super().__init__(f"Имя сессии {name} нельзя заменить на {replacement}")


# ---------------------------------------------------------------------------
# Проекция и пересечение
# ---------------------------------------------------------------------------

class ProjectionUndefined(SessionError):
    """Проекция глобального типа не определена"""


class NonMergeableBranches(ProjectionUndefined):
    def __init__(self, role):
        self.role = role
        super().__init__(f"Ветви дают разные проекции для роли {role}")


class SelfCommunication(SourceError, ProjectionUndefined):
    """Взаимодействие роли с самой собой; отвергается при построении глобального типа"""

    def __init__(self, role):
        self.role = role
        super().__init__(f"Роль {role} взаимодействует сама с собой")


class IntersectionUndefined(SessionError):
    """Пересечение типов не определено"""


class EmptyInterval(IntersectionUndefined):
    def __init__(self, label):
        self.label = label
        super().__init__(f"Пустое пересечение интервалов для метки {label}")


class ShapeMismatch(IntersectionUndefined):
    def __init__(self, left, right):
        self.left = left
        self.right = right
        super().__init__(f"Типы различаются без учёта интервалов: {left} / {right}")


class DomainMismatch(IntersectionUndefined):
    def __init__(self, left, right):
        self.left = tuple(left)
        self.right = tuple(right)
        super().__init__("Типизации заданы на разных каналах")


# ---------------------------------------------------------------------------
# Проверка типов
# ---------------------------------------------------------------------------

class TypeCheckError(SessionError):
    """
    Ошибка проверки типов

    Attributes:
        path (tuple): Имена правил вывода от корня до места ошибки
    """

    def __init__(self, message, path=()):
        self.path = tuple(path)
        self.detail = message
        trail = " > ".join(self.path)
        super().__init__(f"{message} [{trail}]" if trail else message)


class ProbSumNotOne(TypeCheckError):
    def __init__(self, location, total, path=()):
        self.location = location
        self.total = total
        super().__init__(f"Сумма вероятностей в {location} равна {total}, а не 1", path)


class ProbOutsideInterval(TypeCheckError):
    def __init__(self, label, prob, delta, path=()):
        self.label = label
        self.prob = prob
        self.delta = delta
        super().__init__(f"Вероятность {prob} метки {label} вне интервала {delta}", path)


class LabelSetMismatch(TypeCheckError):
    def __init__(self, found, expected, path=()):
        self.found = tuple(sorted(found))
        self.expected = tuple(sorted(expected))
        super().__init__(
            f"Метки {{{', '.join(self.found)}}} не согласуются с {{{', '.join(self.expected)}}}", path
        )


class SortMismatch(TypeCheckError):
    def __init__(self, subject, expected, path=()):
        self.subject = subject
        self.expected = expected
        super().__init__(f"{subject} не имеет сорта {expected}", path)


class UnboundVariable(SortMismatch):
    def __init__(self, name, expected, path=()):
        self.name = name
        super().__init__(f"несвязанная переменная {name}", expected, path)


class NonDisjointTyping(TypeCheckError):
    def __init__(self, channel, path=()):
        self.channel = channel
        super().__init__(f"Канал {channel} используется в обеих параллельных частях", path)


class ProjectionMismatch(TypeCheckError):
    def __init__(self, role, reason="", path=()):
        self.role = role
        self.reason = reason
        suffix = f": {reason}" if reason else ""
        super().__init__(f"Проекция для роли {role} не определена{suffix}", path)


class UnknownProcVar(TypeCheckError):
    def __init__(self, name, path=()):
        self.name = name
        super().__init__(f"Неизвестная процессная переменная {name}", path)


class ResidualNotEndOnly(TypeCheckError):
    def __init__(self, channels, path=()):
        self.channels = tuple(channels)
        super().__init__(
            f"Остаток типизации не завершён: {', '.join(str(c) for c in self.channels)}", path
        )


class MissingAnnotation(TypeCheckError):
    def __init__(self, session, path=()):
        self.session = session
        super().__init__(f"Ограничение {session} не аннотировано глобальным типом", path)


class IllFormedAnnotation(TypeCheckError):
    def __init__(self, session, report, path=()):
        self.session = session
        self.report = report
        super().__init__(f"Аннотация сессии {session} не является корректным глобальным типом", path)


class UntypedChannel(TypeCheckError):
    def __init__(self, channel, path=()):
        self.channel = channel
        super().__init__(f"Канал {channel} отсутствует в типизации", path)


class ChannelMismatch(TypeCheckError):
    def __init__(self, channel, expected, path=()):
        self.channel = channel
        self.expected = expected
        super().__init__(f"Использование канала {channel} не согласуется с типом {expected}", path)


class CallArityMismatch(TypeCheckError):
    """Вызов с неверным числом аргументов, обнаруженный при проверке типов"""

    def __init__(self, name, expected, got, path=()):
        self.name = name
        self.expected = expected
        self.got = got
        super().__init__(f"{name}: ожидалось аргументов {expected}, передано {got}", path)


# ---------------------------------------------------------------------------
# Анализ
# ---------------------------------------------------------------------------

class AnalysisError(SessionError):
    """Ошибка вероятностного анализа"""


class ExplosionGuard(AnalysisError):
    def __init__(self, limit):
        self.limit = limit
        super().__init__(f"Превышен предел числа состояний/путей: {limit}")


class IncompleteProbability(AnalysisError):
    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__(
            "Процесс не является вероятностно полным: "
            + "; ".join(str(v) for v in self.violations)
        )

"""
TermWriter - запись процессов и глобальных типов в файлы .mps / .gty

Термы записываются в формате pretty_print, поэтому записанный файл
читается обратно в структурно равный терм.
"""

import logging
from pathlib import Path

from ..calculus.process import Branch, Call, Def, Nil, Par, Restrict, Select
from ..errors import SourceLoadError
from ..typesys.types import End, Interaction, Rec, TVar
from .printer import pretty_print

logger = logging.getLogger(__name__)

_SUFFIXES = {
    ".mps": (Select, Branch, Restrict, Def, Call, Nil, Par),
    ".gty": (Interaction, Rec, TVar, End),
}


class TermWriter:
    """Класс для записи термов в исходные файлы"""

    def write(self, filepath, term, title=None):
        """
        Записывает терм в файл

        Args:
            filepath (str | Path): Путь к выходному файлу (.mps для процесса, .gty для типа)
            term (Process | GlobalType): Записываемый терм
            title (str): Заголовок для комментария в первой строке

        Raises:
            ValueError: Если расширение не соответствует виду терма
            SourceLoadError: Если файл не удалось записать
        """
        path = Path(filepath)
        expected = _SUFFIXES.get(path.suffix.lower())
        if expected is None:
            raise ValueError(f"Файл должен иметь расширение .mps или .gty: {path}")
        if not isinstance(term, expected):
            raise ValueError(f"Терм {type(term).__name__} нельзя записать в {path.suffix}")

        lines = [f"# {title}"] if title else []
        lines.append(pretty_print(term))
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        except OSError as error:
            raise SourceLoadError(path, error) from None
        logger.debug("Записан %s", path)

    def write_document(self, filepath, document):
        """Записывает терм документа ProtocolDocument"""
        self.write(filepath, document.term, document.name)

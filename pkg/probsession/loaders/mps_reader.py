"""
MpsReader - чтение процессов из файлов .mps

Пути файловых аннотаций `new s : "g.gty"` отсчитываются от каталога
самого файла .mps.
"""

import logging
from pathlib import Path

from .parser import parse_process
from .source import read_source

logger = logging.getLogger(__name__)


class MpsReader:
    """
    Класс для чтения файлов формата .mps

    Attributes:
        process (Process | None): Последний прочитанный процесс
        text (str): Исходный текст последнего файла
        source (str | None): Путь последнего файла
    """

    def __init__(self):
        self.process = None
        self.text = ""
        self.source = None

    def read(self, filepath):
        """
        Читает и разбирает файл .mps

        Args:
            filepath (str | Path): Путь к файлу

        Returns:
            Process: Дерево процесса

        Raises:
            SourceLoadError: Если файл не найден или не читается
            SourceError: Если текст содержит ошибку (с путём, строкой и столбцом)
        """
        path = Path(filepath)
        self.text = read_source(path, ".mps")
        self.source = str(path)
        self.process = parse_process(self.text, base_dir=path.parent, source=self.source)
        logger.debug("Прочитан процесс %s", path)
        return self.process

    def get_process(self):
        return self.process

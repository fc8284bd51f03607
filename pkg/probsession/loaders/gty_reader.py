"""
GtyReader - чтение глобальных типов из файлов .gty
"""

import logging
from pathlib import Path

from .parser import parse_global_type
from .source import read_source

logger = logging.getLogger(__name__)


class GtyReader:
    """Класс для чтения файлов формата .gty"""

    def __init__(self):
        self.global_type = None
        self.text = ""
        self.source = None

    def read(self, filepath):
        """
        Читает и разбирает файл .gty

        Returns:
            GlobalType: Глобальный тип

        Raises:
            SourceLoadError: Если файл не найден или не читается
            SourceError: Если текст не является глобальным типом
        """
        path = Path(filepath)
        self.text = read_source(path, ".gty")
        self.source = str(path)
        self.global_type = parse_global_type(self.text, source=self.source)
        logger.debug("Прочитан глобальный тип %s", path)
        return self.global_type

    def get_global_type(self):
        return self.global_type

"""
Чтение исходных файлов .mps и .gty

Файлы читаются в UTF-8; если декодирование не удалось, выполняется
повторная попытка в cp1251.
"""

import logging
from pathlib import Path

from ..errors import SourceLoadError

logger = logging.getLogger(__name__)

FALLBACK_ENCODING = "cp1251"


def read_source(filepath, suffix):
    """
    Читает текст исходного файла

    Args:
        filepath (str | Path): Путь к файлу
        suffix (str): Ожидаемое расширение (".mps" или ".gty")

    Returns:
        str: Содержимое файла

    Raises:
        SourceLoadError: Если файл не найден, имеет другое расширение или не читается
    """
    path = Path(filepath)
    if path.suffix.lower() != suffix:
        raise SourceLoadError(path, f"файл должен иметь расширение {suffix}")
    if not path.exists():
        raise SourceLoadError(path, "файл не найден")
    try:
        return path.read_text(encoding="utf-8")
    except UnicodeDecodeError:
        logger.info("%s не в UTF-8, читаем как %s", path, FALLBACK_ENCODING)
        try:
            return path.read_text(encoding=FALLBACK_ENCODING)
        except (OSError, UnicodeDecodeError) as error:
            raise SourceLoadError(path, error) from None
    except OSError as error:
        raise SourceLoadError(path, error) from None

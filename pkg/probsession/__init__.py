"""
probsession - вероятностные многосторонние сессии с неточными вероятностями

Подпакеты:
    calculus  - синтаксис процессов, связывание, α-эквивалентность
    dynamics  - структурная конгруэнтность и вероятностная редукция
    typesys   - глобальные и локальные типы, проекция, интервалы
    checker   - проверка типов и исполняемые проверки свойств
    analysis  - пути эволюции, достижимость, моделирование
    loaders   - разбор, печать, чтение и запись файлов .mps/.gty
    models    - документы и рабочее пространство обозревателя
    ui        - окно обозревателя на PyQt5
"""

from .errors import SessionError

__version__ = "0.3.0"

__all__ = ['SessionError', '__version__']

"""
Точка входа обозревателя протоколов

Файлы, переданные в командной строке, открываются сразу после запуска.
"""

import sys

from PyQt5.QtWidgets import QApplication

from .ui.main_window import MainWindow


def main(argv=None):
    argv = sys.argv if argv is None else argv
    app = QApplication(argv)
    app.setApplicationName("Probabilistic Session Explorer")
    app.setOrganizationName("probsession")

    window = MainWindow()
    for filepath in argv[1:]:
        window.load_file(filepath)
    window.show()
    sys.exit(app.exec_())


if __name__ == "__main__":
    main()

"""
MainWindow - главное окно обозревателя протоколов

Слева - список открытых документов (.mps, .gty), в центре - текст терма
и отчёт последнего анализа, справа - анализы: корректность и проекция для
глобальных типов, проверка типов, переходы, достижимость и моделирование
для процессов.
"""

import logging
from pathlib import Path

from PyQt5.QtCore import Qt
from PyQt5.QtWidgets import (
    QComboBox, QFileDialog, QGroupBox, QHBoxLayout, QLabel, QListWidget, QMainWindow,
    QMessageBox, QPlainTextEdit, QPushButton, QSpinBox, QSplitter, QStatusBar, QVBoxLayout,
    QWidget,
)

from ..checker import MODES, SUBSET
from ..errors import SessionError
from ..loaders import TermWriter
from ..models import GLOBAL_TYPE, ProtocolDocument, Workspace
from .theme_manager import ThemeManager

logger = logging.getLogger(__name__)

FILE_FILTER = "Протоколы (*.mps *.gty);;Процессы (*.mps);;Глобальные типы (*.gty);;Все файлы (*)"


class DocumentView(QWidget):
    """Текст выбранного документа и отчёт анализа"""

    def __init__(self, parent=None):
        super().__init__(parent)
        layout = QVBoxLayout()
        self.title_label = QLabel("Откройте файл .mps или .gty")
        self.title_label.setStyleSheet("font-size: 14px; font-weight: bold; padding: 6px;")
        layout.addWidget(self.title_label)

        self.term_view = QPlainTextEdit()
        self.term_view.setReadOnly(True)
        layout.addWidget(self.term_view, 2)

        self.verdict_label = QLabel("")
        self.verdict_label.setObjectName("verdict")
        layout.addWidget(self.verdict_label)

        self.report_view = QPlainTextEdit()
        self.report_view.setReadOnly(True)
        layout.addWidget(self.report_view, 3)
        self.setLayout(layout)

    def show_document(self, document):
        if document is None:
            self.title_label.setText("Откройте файл .mps или .gty")
            self.term_view.setPlainText("")
            self.show_report(None)
            return
        is_valid, message = document.validate()
        self.title_label.setText(f"{document.name} ({document.kind}): {message}")
        self.term_view.setPlainText(document.text())
        self.show_report(None)

    def show_report(self, report):
        if report is None:
            self.verdict_label.setText("")
            self.verdict_label.setProperty("verdict", "")
            self.report_view.setPlainText("")
        else:
            verdict = "pass" if report.ok else "fail"
            self.verdict_label.setText(f"{report.command}: {'OK' if report.ok else 'FAIL'}")
            self.verdict_label.setProperty("verdict", verdict)
            self.report_view.setPlainText("\n".join(report.lines))
        # свойство участвует в селекторе таблицы стилей
        self.verdict_label.style().unpolish(self.verdict_label)
        self.verdict_label.style().polish(self.verdict_label)


class MainWindow(QMainWindow):
    """Главное окно: рабочее пространство, темы, загрузка и запуск анализов"""

    def __init__(self):
        super().__init__()
        self.workspace = Workspace()
        self.theme_manager = ThemeManager()
        self.writer = TermWriter()
        self.last_report = None

        self.init_ui()
        self.apply_theme()
        self.update_controls()

    def init_ui(self):
        self.setWindowTitle("Обозреватель вероятностных сессий")
        self.setGeometry(100, 100, 1200, 800)

        central_widget = QWidget()
        self.setCentralWidget(central_widget)
        main_layout = QHBoxLayout()
        central_widget.setLayout(main_layout)

        splitter = QSplitter(Qt.Horizontal)
        main_layout.addWidget(splitter)
        splitter.addWidget(self.create_left_panel())
        splitter.addWidget(self.create_center_panel())
        splitter.addWidget(self.create_right_panel())
        splitter.setStretchFactor(0, 1)
        splitter.setStretchFactor(1, 3)
        splitter.setStretchFactor(2, 1)

        self.create_menu_bar()
        self.status_bar = QStatusBar()
        self.setStatusBar(self.status_bar)
        self.status_bar.showMessage("Готово")

    def create_left_panel(self):
        panel = QWidget()
        layout = QVBoxLayout()
        panel.setLayout(layout)

        title = QLabel("Документы")
        title.setStyleSheet("font-size: 16px; font-weight: bold; padding: 10px;")
        layout.addWidget(title)

        buttons_layout = QHBoxLayout()
        self.open_btn = QPushButton("Открыть")
        self.open_btn.clicked.connect(self.open_document)
        buttons_layout.addWidget(self.open_btn)

        self.save_btn = QPushButton("Сохранить")
        self.save_btn.clicked.connect(self.save_document)
        buttons_layout.addWidget(self.save_btn)

        self.remove_btn = QPushButton("Закрыть")
        self.remove_btn.clicked.connect(self.remove_document)
        buttons_layout.addWidget(self.remove_btn)
        layout.addLayout(buttons_layout)

        self.documents_list = QListWidget()
        self.documents_list.itemSelectionChanged.connect(self.on_document_selected)
        layout.addWidget(self.documents_list)
        return panel

    def create_center_panel(self):
        self.document_view = DocumentView()
        return self.document_view

    def create_right_panel(self):
        panel = QWidget()
        layout = QVBoxLayout()
        panel.setLayout(layout)

        type_group = QGroupBox("Глобальный тип")
        type_layout = QVBoxLayout()
        self.wf_btn = QPushButton("Корректность")
        self.wf_btn.clicked.connect(self.run_well_formedness)
        type_layout.addWidget(self.wf_btn)

        role_layout = QHBoxLayout()
        role_layout.addWidget(QLabel("Роль:"))
        self.role_combo = QComboBox()
        role_layout.addWidget(self.role_combo)
        self.project_btn = QPushButton("Проекция")
        self.project_btn.clicked.connect(self.run_projection)
        role_layout.addWidget(self.project_btn)
        type_layout.addLayout(role_layout)
        type_group.setLayout(type_layout)
        layout.addWidget(type_group)

        process_group = QGroupBox("Процесс")
        process_layout = QVBoxLayout()

        mode_layout = QHBoxLayout()
        mode_layout.addWidget(QLabel("Режим:"))
        self.mode_combo = QComboBox()
        self.mode_combo.addItems(MODES)
        self.mode_combo.setCurrentText(SUBSET)
        mode_layout.addWidget(self.mode_combo)
        self.check_btn = QPushButton("Проверить типы")
        self.check_btn.clicked.connect(self.run_type_check)
        mode_layout.addWidget(self.check_btn)
        process_layout.addLayout(mode_layout)

        self.step_btn = QPushButton("Переходы за шаг")
        self.step_btn.clicked.connect(self.run_successors)
        process_layout.addWidget(self.step_btn)

        reach_layout = QHBoxLayout()
        reach_layout.addWidget(QLabel("k:"))
        self.k_spin = QSpinBox()
        self.k_spin.setRange(1, 50)
        self.k_spin.setValue(4)
        reach_layout.addWidget(self.k_spin)
        self.reach_btn = QPushButton("Достижимость")
        self.reach_btn.clicked.connect(self.run_reach)
        reach_layout.addWidget(self.reach_btn)
        process_layout.addLayout(reach_layout)

        sim_layout = QHBoxLayout()
        sim_layout.addWidget(QLabel("Трасс:"))
        self.trials_spin = QSpinBox()
        self.trials_spin.setRange(1, 1_000_000)
        self.trials_spin.setValue(10_000)
        sim_layout.addWidget(self.trials_spin)
        sim_layout.addWidget(QLabel("Зерно:"))
        self.seed_spin = QSpinBox()
        self.seed_spin.setRange(0, 2_147_483_647)
        self.seed_spin.setValue(42)
        sim_layout.addWidget(self.seed_spin)
        process_layout.addLayout(sim_layout)
        self.simulate_btn = QPushButton("Моделирование")
        self.simulate_btn.clicked.connect(self.run_simulation)
        process_layout.addWidget(self.simulate_btn)

        process_group.setLayout(process_layout)
        layout.addWidget(process_group)
        layout.addStretch()
        return panel

    def create_menu_bar(self):
        menubar = self.menuBar()

        file_menu = menubar.addMenu('Файл')
        open_action = file_menu.addAction('Открыть...')
        open_action.setShortcut('Ctrl+O')
        open_action.triggered.connect(self.open_document)
        save_action = file_menu.addAction('Сохранить как...')
        save_action.setShortcut('Ctrl+S')
        save_action.triggered.connect(self.save_document)
        file_menu.addSeparator()
        exit_action = file_menu.addAction('Выход')
        exit_action.setShortcut('Ctrl+Q')
        exit_action.triggered.connect(self.close)

        view_menu = menubar.addMenu('Вид')
        theme_action = view_menu.addAction('Переключить тему')
        theme_action.setShortcut('Ctrl+T')
        theme_action.triggered.connect(self.toggle_theme)

        help_menu = menubar.addMenu('Справка')
        about_action = help_menu.addAction('О программе')
        about_action.triggered.connect(self.show_about)

    # --- темы ---
    def apply_theme(self):
        self.setStyleSheet(self.theme_manager.get_stylesheet())

    def toggle_theme(self):
        self.theme_manager.toggle_theme()
        self.apply_theme()
        theme_name = "тёмная" if self.theme_manager.get_theme() == "dark" else "светлая"
        self.status_bar.showMessage(f"Тема изменена на {theme_name}", 2000)

    # --- документы ---
    def open_document(self):
        filepath, _ = QFileDialog.getOpenFileName(self, "Открыть протокол", "", FILE_FILTER)
        if filepath:
            self.load_file(filepath)

    def load_file(self, filepath):
        """
        Загружает документ и делает его выбранным

        Returns:
            bool: True, если документ загружен
        """
        try:
            document = ProtocolDocument.from_file(filepath)
        except SessionError as error:
            self.show_error("Ошибка чтения файла", str(error))
            return False
        index = self.workspace.add_document(document)
        self.update_documents_list()
        self.documents_list.setCurrentRow(index)
        self.status_bar.showMessage(f"Документ '{document.name}' загружен", 3000)
        return True

    def save_document(self):
        document = self.workspace.get_selected_document()
        if document is None:
            self.show_error("Нет выбранного документа", "Выберите документ для сохранения")
            return
        suffix = ".gty" if document.kind == GLOBAL_TYPE else ".mps"
        filepath, _ = QFileDialog.getSaveFileName(
            self, "Сохранить протокол", f"{document.name}{suffix}", FILE_FILTER
        )
        if not filepath:
            return
        try:
            self.writer.write_document(filepath, document)
        except (ValueError, SessionError) as error:
            self.show_error("Ошибка сохранения", str(error))
            return
        self.status_bar.showMessage(f"Документ сохранён в {Path(filepath).name}", 3000)

    def remove_document(self):
        current_row = self.documents_list.currentRow()
        if current_row < 0:
            return
        self.workspace.remove_document(current_row)
        self.update_documents_list()
        if self.workspace.selected_index >= 0:
            self.documents_list.setCurrentRow(self.workspace.selected_index)
        self.on_document_selected()

    def update_documents_list(self):
        self.documents_list.blockSignals(True)
        self.documents_list.clear()
        for i, document in enumerate(self.workspace.documents):
            self.documents_list.addItem(f"{i + 1}. {document.name} ({document.kind})")
        self.documents_list.blockSignals(False)
        self.update_controls()

    def on_document_selected(self):
        current_row = self.documents_list.currentRow()
        if current_row >= 0:
            self.workspace.select_document(current_row)
        document = self.workspace.get_selected_document()
        self.document_view.show_document(document)
        self.role_combo.clear()
        if document is not None:
            self.role_combo.addItems(document.roles())
        self.last_report = None
        self.update_controls()

    def update_controls(self):
        document = self.workspace.get_selected_document()
        has_document = document is not None
        is_type = has_document and document.kind == GLOBAL_TYPE
        is_process = has_document and not is_type
        self.save_btn.setEnabled(has_document)
        self.remove_btn.setEnabled(has_document)
        for button in (self.wf_btn, self.project_btn):
            button.setEnabled(is_type)
        for button in (self.check_btn, self.step_btn, self.reach_btn, self.simulate_btn):
            button.setEnabled(is_process)

    # --- анализы ---
    def run_analysis(self, action):
        """Выполняет анализ выбранного документа и показывает отчёт"""
        document = self.workspace.get_selected_document()
        if document is None:
            return None
        try:
            report = action(document)
        except (SessionError, ValueError) as error:
            logger.info("Анализ прерван: %s", error)
            self.show_error("Ошибка анализа", str(error))
            return None
        self.last_report = report
        self.document_view.show_report(report)
        self.status_bar.showMessage(f"{report.command}: {'OK' if report.ok else 'FAIL'}", 3000)
        return report

    def run_well_formedness(self):
        return self.run_analysis(lambda d: d.well_formedness())

    def run_projection(self):
        role = self.role_combo.currentText()
        return self.run_analysis(lambda d: d.projection(role))

    def run_type_check(self):
        mode = self.mode_combo.currentText()
        return self.run_analysis(lambda d: d.type_check(mode))

    def run_successors(self):
        return self.run_analysis(lambda d: d.successors())

    def run_reach(self):
        k = self.k_spin.value()
        return self.run_analysis(lambda d: d.reach(k))

    def run_simulation(self):
        trials, seed = self.trials_spin.value(), self.seed_spin.value()
        return self.run_analysis(lambda d: d.simulate(trials, seed))

    def show_error(self, title, message):
        msg_box = QMessageBox(self)
        msg_box.setIcon(QMessageBox.Critical)
        msg_box.setWindowTitle(title)
        msg_box.setText(message)
        msg_box.exec_()

    def show_about(self):
        QMessageBox.about(
            self,
            "О программе",
            "Обозреватель вероятностных сессий\n\n"
            "Процессы (.mps) и глобальные типы (.gty) с неточными вероятностями.\n\n"
            "Возможности:\n"
            "- Проверка корректности и проекция глобальных типов\n"
            "- Проверка типов процессов\n"
            "- Переходы, множества достижимости и моделирование\n"
            "- Светлая и тёмная темы"
        )

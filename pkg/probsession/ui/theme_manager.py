"""
ThemeManager - светлая и тёмная темы обозревателя

Тема задаётся палитрой; таблица стилей Qt собирается из одного шаблона.
Палитра содержит также цвета вердиктов для отчётов анализа.
"""

from string import Template

LIGHT_PALETTE = {
    "window": "#f5f5f5",
    "base": "#ffffff",
    "text": "#212121",
    "border": "#e0e0e0",
    "accent": "#2196F3",
    "accent_hover": "#1976D2",
    "accent_pressed": "#0D47A1",
    "selection": "#E3F2FD",
    "selection_text": "#1976D2",
    "disabled": "#cccccc",
    "disabled_text": "#666666",
    "pass": "#2e7d32",
    "fail": "#c62828",
}

DARK_PALETTE = {
    "window": "#121212",
    "base": "#1e1e1e",
    "text": "#e0e0e0",
    "border": "#424242",
    "accent": "#2196F3",
    "accent_hover": "#1976D2",
    "accent_pressed": "#0D47A1",
    "selection": "#1976D2",
    "selection_text": "#ffffff",
    "disabled": "#424242",
    "disabled_text": "#757575",
    "pass": "#81c784",
    "fail": "#ef9a9a",
}

_STYLESHEET = Template("""
QMainWindow { background-color: $window; }
QWidget { background-color: $base; color: $text; }
QPushButton {
    background-color: $accent; color: white; border: none;
    padding: 8px 16px; border-radius: 4px; font-weight: bold;
}
QPushButton:hover { background-color: $accent_hover; }
QPushButton:pressed { background-color: $accent_pressed; }
QPushButton:disabled { background-color: $disabled; color: $disabled_text; }
QListWidget { border: 1px solid $border; border-radius: 4px; }
QListWidget::item { padding: 8px; border-bottom: 1px solid $border; }
QListWidget::item:selected { background-color: $selection; color: $selection_text; }
QPlainTextEdit { border: 1px solid $border; border-radius: 4px; font-family: monospace; }
QLineEdit, QSpinBox, QComboBox {
    border: 1px solid $border; border-radius: 4px; padding: 6px;
}
QLineEdit:focus, QSpinBox:focus, QComboBox:focus { border: 2px solid $accent; }
QGroupBox {
    border: 1px solid $border; border-radius: 4px; margin-top: 10px; font-weight: bold;
}
QGroupBox::title { subcontrol-origin: margin; left: 10px; padding: 0 5px; }
QMenuBar::item:selected, QMenu::item:selected { background-color: $selection; }
QMenu { border: 1px solid $border; }
QStatusBar { background-color: $window; color: $text; }
QLabel#verdict[verdict="pass"] { color: $pass; font-weight: bold; }
QLabel#verdict[verdict="fail"] { color: $fail; font-weight: bold; }
""")


class ThemeManager:
    """Переключение тем и построение таблицы стилей"""

    LIGHT_THEME = "light"
    DARK_THEME = "dark"

    _PALETTES = {LIGHT_THEME: LIGHT_PALETTE, DARK_THEME: DARK_PALETTE}

    def __init__(self):
        self.current_theme = self.LIGHT_THEME

    def get_theme(self):
        return self.current_theme

    def set_theme(self, theme):
        """
        Args:
            theme (str): 'light' или 'dark'; другие значения игнорируются
        """
        if theme in self._PALETTES:
            self.current_theme = theme

    def toggle_theme(self):
        if self.current_theme == self.LIGHT_THEME:
            self.current_theme = self.DARK_THEME
        else:
            self.current_theme = self.LIGHT_THEME
        return self.current_theme

    def palette(self):
        return dict(self._PALETTES[self.current_theme])

    def verdict_color(self, ok):
        return self._PALETTES[self.current_theme]["pass" if ok else "fail"]

    def get_stylesheet(self):
        return _STYLESHEET.substitute(self._PALETTES[self.current_theme])

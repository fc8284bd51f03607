from .theme_manager import DARK_PALETTE, LIGHT_PALETTE, ThemeManager
from .main_window import DocumentView, MainWindow

__all__ = ['DARK_PALETTE', 'LIGHT_PALETTE', 'ThemeManager', 'DocumentView', 'MainWindow']

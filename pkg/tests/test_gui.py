import pytest

pytest.importorskip("PyQt5")

from PyQt5.QtWidgets import QApplication  # noqa: E402

from probsession.ui import MainWindow, ThemeManager  # noqa: E402


@pytest.fixture(scope="module")
def app():
    return QApplication.instance() or QApplication([])


@pytest.fixture
def window(app, monkeypatch):
    errors = []
    main_window = MainWindow()
    monkeypatch.setattr(main_window, "show_error", lambda title, message: errors.append(title))
    main_window.errors = errors
    yield main_window
    main_window.close()


def open_fixture(window, fixture_dir, name):
    assert window.load_file(str(fixture_dir / name))
    window.on_document_selected()


def test_process_analyses(window, fixture_dir):
    open_fixture(window, fixture_dir, "com_two.mps")
    assert window.check_btn.isEnabled()
    assert not window.wf_btn.isEnabled()
    assert window.run_type_check().ok
    assert window.run_successors().lines[0] == "next_proc = 1"
    window.k_spin.setValue(2)
    assert window.run_reach().ok
    window.trials_spin.setValue(300)
    assert window.run_simulation().command == "simulate"
    assert window.last_report.command == "simulate"


def test_global_type_analyses(window, fixture_dir):
    open_fixture(window, fixture_dir, "ga_unreachable.gty")
    assert window.wf_btn.isEnabled()
    assert window.role_combo.count() == 2
    assert not window.run_well_formedness().ok
    assert window.run_projection().ok


def test_wrong_analysis_is_reported(window, fixture_dir):
    open_fixture(window, fixture_dir, "ga_open.gty")
    assert window.run_reach() is None
    assert window.errors == ["Ошибка анализа"]


def test_bad_file_is_reported(window, tmp_path):
    assert not window.load_file(str(tmp_path / "absent.mps"))
    assert window.errors == ["Ошибка чтения файла"]
    assert window.workspace.get_document_count() == 0


def test_remove_document(window, fixture_dir):
    open_fixture(window, fixture_dir, "com_two.mps")
    open_fixture(window, fixture_dir, "ga_open.gty")
    window.documents_list.setCurrentRow(0)
    window.remove_document()
    assert window.workspace.get_document_names() == ["ga_open"]


def test_theme_toggle(window):
    manager = window.theme_manager
    light = manager.get_stylesheet()
    window.toggle_theme()
    assert manager.get_theme() == ThemeManager.DARK_THEME
    assert manager.get_stylesheet() != light
    assert manager.verdict_color(True) != manager.verdict_color(False)
    manager.set_theme("sepia")
    assert manager.get_theme() == ThemeManager.DARK_THEME

import os

import pytest
from hypothesis import settings

from probsession.fixtures import CORPUS, FIXTURE_DIR, load_fixture
from probsession.loaders import GtyReader

os.environ.setdefault("QT_QPA_PLATFORM", "offscreen")

settings.register_profile("default", deadline=None)
settings.register_profile("ci", deadline=None, max_examples=200)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def fixture_dir():
    return FIXTURE_DIR


@pytest.fixture(scope="session")
def corpus():
    """Имя примера -> процесс"""
    return {entry.name: load_fixture(entry) for entry in CORPUS}


@pytest.fixture(scope="session")
def global_types(fixture_dir):
    """Имя файла .gty -> глобальный тип"""
    reader = GtyReader()
    return {path.name: reader.read(path) for path in sorted(fixture_dir.glob("*.gty"))}

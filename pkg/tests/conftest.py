"""Shared fixtures for the shiftforge test suite."""

from pathlib import Path

import pytest
from hypothesis import strategies as st

from config import get_settings
from groups.words import Word
from models import SpecBuilder

PROJECT_ROOT = Path(__file__).parent.parent
SPECS_DIR = PROJECT_ROOT / "specs"
GOLDEN_DIR = Path(__file__).parent / "golden"


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive balls and large random samples; deselect with -m 'not slow'")


def words_over(names, max_size=16):
    """Hypothesis strategy for unreduced words over `names`."""
    letters = st.tuples(st.sampled_from(tuple(names)), st.sampled_from((1, -1)))
    return st.lists(letters, max_size=max_size).map(lambda items: Word(tuple(items)))


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Every test sees default settings, whatever the environment says."""
    for name in ("WINDOW_RADIUS", "MAX_RADIUS", "BS_DEPTH", "PROBE_WORKERS", "REPORT_DIR", "LOG_LEVEL"):
        monkeypatch.delenv(f"SHIFTFORGE_{name}", raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def specs_dir():
    return SPECS_DIR


@pytest.fixture
def golden_dir():
    return GOLDEN_DIR


@pytest.fixture
def spec_builder():
    """Load a spec document from specs/ by file name."""

    def load(name, window=None):
        return SpecBuilder.load(SPECS_DIR / name, window=window)

    return load

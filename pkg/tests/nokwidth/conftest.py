import sys
from pathlib import Path

import pytest


def pytest_configure(config):
    """Make the src/ layout importable without an editable install."""
    repo_root = Path(__file__).resolve().parents[2]
    src_path = str(repo_root / "src")
    if src_path not in sys.path:
        sys.path.insert(0, src_path)
    config.addinivalue_line("markers", "slow: long-running acceptance checks")


@pytest.fixture
def root_system():
    """Factory: root_system("B3") -> cached RootSystem."""
    from nokwidth.rootsys import CartanType, build_root_system

    def _factory(name: str):
        return build_root_system(CartanType.parse(name))

    return _factory


@pytest.fixture
def coords():
    """Factory: coords(enumeration) -> list of root coordinate tuples."""

    def _factory(e):
        return [b.coords for b in e.roots]

    return _factory

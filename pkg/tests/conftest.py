import random

import pytest

from src.exact_algebra import x
from src.poly_spaces import PolySpace


@pytest.fixture(autouse=True)
def isolated_environment(tmp_path, monkeypatch):
    monkeypatch.setenv("GRSTRAT_LOG_DIR", str(tmp_path / "logs"))
    monkeypatch.delenv("GRSTRAT_MAX_CELLS", raising=False)


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def line():
    """span{1, x} in Gr(2,3)."""
    return PolySpace.from_polys([x**0, x], 3)

import pytest

from ctxdegree.config import settings
from ctxdegree.geometry.named import build_named
from ctxdegree.oracle.brute_force import invalid_distribution


@pytest.fixture(autouse=True)
def temp_cache_dir(tmp_path, monkeypatch):
    """Keep cached distributions out of the working directory"""
    monkeypatch.setattr(settings, "cache_dir", str(tmp_path / "cache"))
    yield tmp_path / "cache"


@pytest.fixture(scope="session")
def triangle():
    return build_named("triangle")


@pytest.fixture(scope="session")
def grid():
    return build_named("grid")


@pytest.fixture(scope="session")
def doily():
    return build_named("doily")


@pytest.fixture(scope="session")
def two_spread():
    return build_named("two_spread")


@pytest.fixture(scope="session")
def eloily():
    return build_named("eloily")


@pytest.fixture(scope="session")
def triangle_dist(triangle):
    return invalid_distribution(triangle)


@pytest.fixture(scope="session")
def grid_dist(grid):
    return invalid_distribution(grid)


@pytest.fixture(scope="session")
def doily_dist(doily):
    return invalid_distribution(doily)


@pytest.fixture(scope="session")
def two_spread_dist(two_spread):
    return invalid_distribution(two_spread)


@pytest.fixture(scope="session")
def eloily_dist(eloily):
    """2^27 assignments; only requested by slow tests"""
    return invalid_distribution(eloily)

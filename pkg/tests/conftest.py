"""Shared fixtures."""

import pytest

from prymcusps.config import get_settings
from prymcusps.services.prototypes import enumerate_prototypes, validate, validate_algebraic
from prymcusps.utils.cache import clear_caches


@pytest.fixture(autouse=True)
def fresh_state(monkeypatch):
    """Start every test with empty enumeration caches and default settings."""
    for name in ("LOG_LEVEL", "DISPLAY_DIGITS", "STABLE_PRECISION", "VERIFY_DMAX", "MAX_WORKERS"):
        monkeypatch.delenv(f"PRYMCUSPS_{name}", raising=False)
    get_settings.cache_clear()
    clear_caches()
    yield
    get_settings.cache_clear()
    clear_caches()


@pytest.fixture
def d17_prototypes():
    return enumerate_prototypes(17)


@pytest.fixture
def switching_b():
    """[2,1,1,-1] of D = 17: type B, second component, real marked points."""
    return validate_algebraic(2, 1, 1, -1, 17)


@pytest.fixture
def twisted_33():
    return validate(2, 2, 1, 1, -1, 33)

import mpmath
import pytest

from fibarctan import catalog


@pytest.fixture
def mp50():
    with mpmath.workdps(60):
        yield mpmath.mp


@pytest.fixture
def no_perturbation(monkeypatch):
    monkeypatch.setattr(catalog, "_perturbation", None)

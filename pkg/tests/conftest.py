"""
Общие фикстуры тестов.
"""

import os

import numpy as np
import pytest

from model.problem_model import ScalarProblem, SystemProblem


@pytest.fixture(scope="session", autouse=True)
def reference_cache_dir(tmp_path_factory):
    """Кэш эталонов во временном каталоге на всю сессию."""
    path = tmp_path_factory.mktemp("reference-cache")
    previous = os.environ.get("REFERENCE_CACHE_DIR")
    os.environ["REFERENCE_CACHE_DIR"] = str(path)
    yield path
    if previous is None:
        os.environ.pop("REFERENCE_CACHE_DIR", None)
    else:
        os.environ["REFERENCE_CACHE_DIR"] = previous


@pytest.fixture
def linear_scalar():
    """Фабрика задачи u' = λu."""

    def build(lam: float) -> ScalarProblem:
        return ScalarProblem(
            rhs=lambda t, u: lam * u,
            rhs_t=lambda t, u: 0.0,
            rhs_u=lambda t, u: lam,
            exact=lambda t: np.exp(lam * t),
            name="linear",
            params={"lam": lam},
        )

    return build


@pytest.fixture
def linear_system():
    """Фабрика системы u' = Au."""

    def build(a) -> SystemProblem:
        a = np.atleast_2d(np.asarray(a, dtype=float))
        dim = a.shape[0]
        return SystemProblem(
            dim=dim,
            rhs=lambda t, u: a @ u,
            rhs_t=lambda t, u: np.zeros(dim),
            jacobian=lambda t, u: a,
            name="linear-system",
        )

    return build

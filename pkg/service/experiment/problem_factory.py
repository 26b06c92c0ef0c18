"""
ProblemFactory — закрытый реестр тестовых задач.

## Бизнес-контекст
Пять задач с аналитическими производными:
- exp-decay: u' = λu, λ = −1, u(0) = 1, точное решение e^{λt}
- stiff-linear: u' = λ(u − cos t) − sin t, λ = −2100, u(0) = 1, точное cos t
- stiff-nonlinear: u' = μ₁(u − cos t) + μ₂(u² − cos² t) − sin t,
  μ₁ = −2100, μ₂ = 10, u(0) = 1, точное cos t
- spring: p' = −(c/m)p − kq, q' = p/m, m = 1, c = 1001, k = 1000,
  (p, q)(0) = (−1, 1), точное решение по модам e^{rt}, для u0 по умолчанию e^{−t}(−1, 1)
- lorenz: x' = a(y − x), y' = x(c − z) − y, z' = xy − bz,
  a = 61.8, b = 8/3, c = 28, (x, y, z)(0) = (4, 4, 8), эталон RK4 с τ = 0.001

## Исключения
- UnknownProblemError: неизвестный идентификатор
- ValidationError: неизвестный параметр в overrides
"""

import math
from dataclasses import dataclass
from typing import Any, Optional

import numpy as np

from core.exceptions import UnknownProblemError, ValidationError
from model.enums import ProblemIdEnum, ReferenceKindEnum
from model.problem_model import Problem, ScalarProblem, SystemProblem

DEFAULT_PARAMS: dict[ProblemIdEnum, dict[str, float]] = {
    ProblemIdEnum.EXP_DECAY: {"lam": -1.0, "u0": 1.0, "horizon": 4.0},
    ProblemIdEnum.STIFF_LINEAR: {"lam": -2100.0, "u0": 1.0, "horizon": 4.0},
    ProblemIdEnum.STIFF_NONLINEAR: {"mu1": -2100.0, "mu2": 10.0, "u0": 1.0, "horizon": 4.0},
    ProblemIdEnum.SPRING: {"m": 1.0, "c": 1001.0, "k": 1000.0, "p0": -1.0, "q0": 1.0, "horizon": 16.0},
    ProblemIdEnum.LORENZ: {
        "a": 61.8,
        "b": 8.0 / 3.0,
        "c": 28.0,
        "x0": 4.0,
        "y0": 4.0,
        "z0": 8.0,
        "horizon": 10.0,
    },
}


@dataclass(frozen=True, eq=False)
class ProblemSetup:
    """Задача вместе с начальными данными и горизонтом."""

    problem_id: ProblemIdEnum
    problem: Problem
    u0: Any
    t0: float
    horizon: float
    reference: ReferenceKindEnum
    params: dict


def _exp_decay(p: dict) -> ScalarProblem:
    lam = p["lam"]
    u0 = p["u0"]
    return ScalarProblem(
        rhs=lambda t, u: lam * u,
        rhs_t=lambda t, u: 0.0,
        rhs_u=lambda t, u: lam,
        exact=lambda t: u0 * np.exp(lam * t),
        name=ProblemIdEnum.EXP_DECAY.value,
        params=p,
    )


def _stiff_linear(p: dict) -> ScalarProblem:
    lam = p["lam"]
    return ScalarProblem(
        rhs=lambda t, u: lam * (u - np.cos(t)) - np.sin(t),
        rhs_t=lambda t, u: lam * np.sin(t) - np.cos(t),
        rhs_u=lambda t, u: lam,
        exact=np.cos,
        name=ProblemIdEnum.STIFF_LINEAR.value,
        params=p,
    )


def _stiff_nonlinear(p: dict) -> ScalarProblem:
    mu1, mu2 = p["mu1"], p["mu2"]

    def rhs(t, u):
        c = np.cos(t)
        return mu1 * (u - c) + mu2 * (u * u - c * c) - np.sin(t)

    def rhs_t(t, u):
        s, c = np.sin(t), np.cos(t)
        return mu1 * s + 2.0 * mu2 * c * s - c

    return ScalarProblem(
        rhs=rhs,
        rhs_t=rhs_t,
        rhs_u=lambda t, u: mu1 + 2.0 * mu2 * u,
        exact=np.cos,
        name=ProblemIdEnum.STIFF_NONLINEAR.value,
        params=p,
    )


def spring_matrix(p: dict) -> np.ndarray:
    return np.array([[-p["c"] / p["m"], -p["k"]], [1.0 / p["m"], 0.0]])


def spring_modes(p: dict) -> tuple[complex, complex]:
    """
    Корни r² + (c/m)r + k/m = 0, жёсткий первым.

    Для Δ ≥ 0 используется устойчивая форма q = −(b + sign(b)√Δ)/2, r = q, (k/m)/q.
    """
    b = p["c"] / p["m"]
    c0 = p["k"] / p["m"]
    delta = b * b - 4.0 * c0
    if delta >= 0.0:
        sign = 1.0 if b >= 0.0 else -1.0
        q = -0.5 * (b + sign * math.sqrt(delta))
        if q == 0.0:
            return complex(0.0), complex(-b)
        return complex(q), complex(c0 / q)
    half = 0.5 * math.sqrt(-delta)
    return complex(-0.5 * b, half), complex(-0.5 * b, -half)


def _spring(p: dict) -> SystemProblem:
    a = spring_matrix(p)
    m = p["m"]
    p0, q0 = p["p0"], p["q0"]
    r1, r2 = spring_modes(p)

    # моды (m·r, 1)·e^{rt}; при (p0, q0) = (−1, 1) коэффициент жёсткой моды ровно 0
    if r1 != r2:
        a1 = (p0 / m - q0 * r2) / (r1 - r2)
        a2 = q0 - a1

        def exact(t):
            e1, e2 = a1 * np.exp(r1 * t), a2 * np.exp(r2 * t)
            return np.real(np.array([m * (r1 * e1 + r2 * e2), e1 + e2]))

    else:
        r = r1.real
        slope = p0 / m - r * q0

        def exact(t):
            q = (q0 + slope * t) * np.exp(r * t)
            return np.array([m * (r * q + slope * np.exp(r * t)), q])

    return SystemProblem(
        dim=2,
        rhs=lambda t, u: a @ u,
        rhs_t=lambda t, u: np.zeros(2),
        jacobian=lambda t, u: a,
        exact=exact,
        name=ProblemIdEnum.SPRING.value,
        params=p,
    )


def _lorenz(p: dict) -> SystemProblem:
    a, b, c = p["a"], p["b"], p["c"]

    def rhs(t, u):
        x, y, z = u
        return np.array([a * (y - x), x * (c - z) - y, x * y - b * z])

    def jacobian(t, u):
        x, y, z = u
        return np.array([[-a, a, 0.0], [c - z, -1.0, -x], [y, x, -b]])

    return SystemProblem(
        dim=3,
        rhs=rhs,
        rhs_t=lambda t, u: np.zeros(3),
        jacobian=jacobian,
        exact=None,
        name=ProblemIdEnum.LORENZ.value,
        params=p,
    )


_BUILDERS = {
    ProblemIdEnum.EXP_DECAY: _exp_decay,
    ProblemIdEnum.STIFF_LINEAR: _stiff_linear,
    ProblemIdEnum.STIFF_NONLINEAR: _stiff_nonlinear,
    ProblemIdEnum.SPRING: _spring,
    ProblemIdEnum.LORENZ: _lorenz,
}


def parse_problem_id(value: str | ProblemIdEnum) -> ProblemIdEnum:
    try:
        return ProblemIdEnum(value)
    except ValueError:
        raise UnknownProblemError(str(value))


def build_problem(
    problem_id: str | ProblemIdEnum,
    overrides: Optional[dict[str, float]] = None,
) -> ProblemSetup:
    """
    Собрать задачу реестра.

    ## Входные данные
    - problem_id: идентификатор задачи
    - overrides: замена параметров по умолчанию (например {"lam": -1.0})

    ## Выходные данные
    - ProblemSetup: задача, u0, t0 = 0, горизонт, вид эталона
    """
    pid = parse_problem_id(problem_id)
    params = dict(DEFAULT_PARAMS[pid])
    for key, value in (overrides or {}).items():
        if key not in params:
            raise ValidationError(f"Неизвестный параметр задачи '{pid.value}': {key}")
        params[key] = float(value)

    problem = _BUILDERS[pid](params)
    if pid == ProblemIdEnum.SPRING:
        u0 = np.array([params["p0"], params["q0"]])
    elif pid == ProblemIdEnum.LORENZ:
        u0 = np.array([params["x0"], params["y0"], params["z0"]])
    else:
        u0 = params["u0"]

    reference = ReferenceKindEnum.RK4_REFERENCE if problem.exact is None else ReferenceKindEnum.ANALYTIC
    return ProblemSetup(
        problem_id=pid,
        problem=problem,
        u0=u0,
        t0=0.0,
        horizon=params["horizon"],
        reference=reference,
        params=params,
    )

import math

import numpy as np
import pytest

from core.exceptions import UnsupportedModeError, ValidationError, WeightDegeneracyError
from model.enums import WeightModeEnum
from model.problem_model import State
from model.weight_model import WeightPolicy
from service.experiment.problem_factory import build_problem
from service.integrator import TwoStageService
from service.ode import EvaluationCounter
from service.stability import StabilityFunctionService

EPS = np.finfo(float).eps


@pytest.fixture
def two_stage():
    return TwoStageService()


def _abs_terms(z: float, c: float) -> float:
    a = abs(z)
    return 1.0 + a + a**2 / 2.0 + a**3 / 6.0 + a**4 / 24.0 + abs(c) * a**5 / 120.0


def _matrix_f(m: np.ndarray, c: float) -> np.ndarray:
    eye = np.eye(m.shape[0])
    result = (c / 120.0) * m + eye / 24.0
    for coeff in (1.0 / 6.0, 0.5, 1.0, 1.0):
        result = result @ m + coeff * eye
    return result


@pytest.mark.parametrize(
    "mode, z_max, c_max",
    [
        (WeightModeEnum.ALPHA_SHIFT, 3.0, 0.5),
        # |сдвиг| ≤ 0.225, β остаётся далеко от нуля
        (WeightModeEnum.BETA_SHIFT, 3.0, 0.5),
    ],
)
def test_linear_step_equals_stability_function(two_stage, linear_scalar, mode, z_max, c_max):
    rng = np.random.default_rng(20240611 + len(mode.value))
    for _ in range(50_000):
        lam = -(10.0 ** rng.uniform(-2.0, 2.0))
        z = -rng.uniform(0.0, z_max)
        tau = z / lam
        c = rng.uniform(-c_max, c_max)
        u = rng.uniform(-10.0, 10.0)
        s = two_stage.step_scalar(linear_scalar(lam), State(0.0, u), tau, WeightPolicy(c=c, mode=mode))
        expected = StabilityFunctionService.f(c, tau * lam) * u
        assert abs(s.u - expected) <= 16.0 * EPS * _abs_terms(tau * lam, c) * abs(u)


@pytest.mark.parametrize("c", [-0.7, 0.5, 1.0])
def test_system_step_equals_matrix_stability_function(two_stage, linear_system, c):
    a = np.array([[-3.0, 1.0, 0.5], [0.2, -1.5, 0.4], [0.0, 0.8, -2.2]])
    u = np.array([1.0, -2.0, 0.5])
    tau = 0.4
    s = two_stage.step_system(linear_system(a), State(0.0, u), tau, c)
    expected = _matrix_f(tau * a, c) @ u
    np.testing.assert_allclose(s.u, expected, rtol=1e-13, atol=1e-14)


def test_zero_step_is_identity(two_stage, linear_scalar):
    s = two_stage.step_scalar(linear_scalar(-2.0), State(1.0, 0.5), 0.0, WeightPolicy(c=1.0))
    assert (s.t, s.u) == (1.0, 0.5)


def test_negative_step_rejected(two_stage, linear_scalar):
    with pytest.raises(ValidationError, match=r"^--tau: шаг .*\(tau must be positive\)"):
        two_stage.step_scalar(linear_scalar(-2.0), State(0.0, 1.0), -0.1, WeightPolicy())


def test_scalar_and_one_dimensional_system_agree_bitwise(two_stage, linear_scalar, linear_system):
    lam, tau, c = -1.7, 0.37, 0.8
    scalar = linear_scalar(lam)
    system = linear_system([[lam]])
    s = State(0.0, 1.0)
    v = State(0.0, np.array([1.0]))
    for _ in range(20):
        s = two_stage.step_scalar(scalar, s, tau, WeightPolicy(c=c))
        v = two_stage.step_system(system, v, tau, c)
        assert s.u == v.u[0]


def test_system_rejects_beta_shift(two_stage, linear_system):
    with pytest.raises(UnsupportedModeError):
        two_stage.step_system(linear_system(np.eye(2)), State(0.0, np.ones(2)), 0.1, 1.0, WeightModeEnum.BETA_SHIFT)


def test_beta_degeneracy_detected(two_stage, linear_scalar):
    # β = 2/3 + (C/60)x³ обращается в ноль при x = −40^{1/3}, C = 1
    tau = 40.0 ** (1.0 / 3.0)
    policy = WeightPolicy(c=1.0, mode=WeightModeEnum.BETA_SHIFT)
    with pytest.raises(WeightDegeneracyError) as info:
        two_stage.step_scalar(linear_scalar(-1.0), State(0.0, 1.0), tau, policy)
    assert info.value.code == "WEIGHT_DEGENERACY"
    assert abs(info.value.beta) < 1e-3


def test_two_derivative_evaluations_per_step(two_stage):
    counter = EvaluationCounter(build_problem("stiff-nonlinear").problem)
    two_stage.step_scalar(counter.problem, State(0.0, 1.0), 1e-3, WeightPolicy(c=0.5))
    assert counter.dt_l == 2
    assert counter.snapshot() == {"rhs": 2, "rhs_t": 2, "rhs_u": 2, "dt_l": 2}


def test_fourth_order_local_error_on_stiff_nonlinear(two_stage):
    p = build_problem("stiff-nonlinear").problem
    t0 = 0.5
    taus = [1e-2, 5e-3, 2e-3, 1e-3]
    errors = []
    for tau in taus:
        s = two_stage.step_scalar(p, State(t0, math.cos(t0)), tau, WeightPolicy(c=0.0))
        errors.append(abs(s.u - math.cos(t0 + tau)))
    slope = np.polyfit(np.log(taus), np.log(errors), 1)[0]
    assert slope >= 4.7

import numpy as np
import pytest

from core.exceptions import ContractViolationError, EvaluationError
from model.problem_model import ScalarProblem, SystemProblem
from service.experiment.problem_factory import build_problem, spring_matrix
from service.ode import ConsistencyService, DerivativeService, EvaluationCounter


@pytest.fixture
def derivatives():
    return DerivativeService()


def test_stiff_linear_at_origin(derivatives):
    p = build_problem("stiff-linear").problem
    # L(0, 1) = 0, поэтому D_t L = L_t(0, 1) = −cos 0
    assert derivatives.dt_l(p, 0.0, 1.0) == pytest.approx(-1.0, abs=1e-12)


def test_stiff_linear_off_solution(derivatives):
    p = build_problem("stiff-linear").problem
    # L(0, 2) = −2100, L_t = −1, L_u = −2100
    assert derivatives.dt_l(p, 0.0, 2.0) == pytest.approx(-1.0 + 2100.0**2)


def test_linear_scalar_is_lambda_squared(derivatives, linear_scalar):
    p = linear_scalar(-3.0)
    assert derivatives.dt_l(p, 0.7, 2.0) == pytest.approx(18.0)


def test_spring_is_matrix_squared(derivatives):
    setup = build_problem("spring")
    a = spring_matrix(setup.params)
    u = np.array([0.3, -0.2])
    np.testing.assert_allclose(derivatives.dt_l(setup.problem, 0.0, u), a @ a @ u, rtol=1e-14)


def test_spring_initial_point(derivatives):
    setup = build_problem("spring")
    np.testing.assert_allclose(derivatives.dt_l(setup.problem, 0.0, setup.u0), [-1.0, 1.0], rtol=1e-12)


@pytest.mark.parametrize("name, t, u", [
    ("stiff-nonlinear", 0.3, 0.9),
    ("stiff-linear", 1.1, 0.4),
    ("exp-decay", 0.5, 1.3),
])
def test_matches_finite_difference_scalar(derivatives, name, t, u):
    p = build_problem(name).problem
    exact = derivatives.dt_l(p, t, u)
    assert ConsistencyService().finite_difference_dt_l(p, t, u) == pytest.approx(exact, rel=1e-5, abs=1e-6)


def test_matches_finite_difference_lorenz(derivatives):
    p = build_problem("lorenz").problem
    u = np.array([4.0, 4.0, 8.0])
    np.testing.assert_allclose(
        ConsistencyService().finite_difference_dt_l(p, 0.0, u),
        derivatives.dt_l(p, 0.0, u),
        rtol=1e-4,
        atol=1e-4,
    )


def test_non_finite_result_raises(derivatives):
    p = ScalarProblem(rhs=lambda t, u: np.inf, rhs_t=lambda t, u: 0.0, rhs_u=lambda t, u: 1.0)
    with pytest.raises(EvaluationError):
        derivatives.dt_l(p, 0.0, 1.0)


def test_wrong_jacobian_shape_raises(derivatives):
    p = SystemProblem(
        dim=2,
        rhs=lambda t, u: u,
        rhs_t=lambda t, u: np.zeros(2),
        jacobian=lambda t, u: np.eye(3),
    )
    with pytest.raises(ContractViolationError):
        derivatives.dt_l(p, 0.0, np.ones(2))


def test_counter_counts_each_function_once(derivatives, linear_scalar):
    counter = EvaluationCounter(linear_scalar(-1.0))
    derivatives.dt_l(counter.problem, 0.0, 1.0)
    assert counter.snapshot() == {"rhs": 1, "rhs_t": 1, "rhs_u": 1, "dt_l": 1}
    counter.reset()
    assert counter.snapshot() == {"rhs": 0, "rhs_t": 0, "rhs_u": 0, "dt_l": 0}

import math

import numpy as np

from model.problem_model import State
from model.weight_model import WeightPolicy
from service.experiment.problem_factory import build_problem
from service.integrator import RK4Service, TwoStageService
from service.ode import EvaluationCounter


def test_linear_step_is_fourth_order_taylor(linear_scalar):
    z = -0.3
    s = RK4Service().step(linear_scalar(-1.0), State(0.0, 1.0), -z)
    assert math.isclose(s.u, 1.0 + z + z**2 / 2 + z**3 / 6 + z**4 / 24, rel_tol=1e-14)


def test_four_rhs_evaluations_per_step():
    counter = EvaluationCounter(build_problem("lorenz").problem)
    RK4Service().step(counter.problem, State(0.0, np.array([4.0, 4.0, 8.0])), 0.01)
    assert counter.snapshot() == {"rhs": 4, "rhs_t": 0, "rhs_u": 0, "dt_l": 0}


def test_two_stage_with_zero_c_matches_rk4_on_linear_problem(linear_scalar):
    p = linear_scalar(-2.5)
    for tau in (0.1, 0.5, 1.1):
        rk4 = RK4Service().step(p, State(0.0, 1.0), tau)
        two_stage = TwoStageService().step_scalar(p, State(0.0, 1.0), tau, WeightPolicy(c=0.0))
        assert math.isclose(two_stage.u, rk4.u, rel_tol=1e-14)


def test_two_stage_with_zero_c_differs_from_rk4_on_nonlinear_problem():
    p = build_problem("stiff-nonlinear", {"mu1": -2.0, "mu2": 1.0}).problem
    rk4 = RK4Service().step(p, State(0.0, 1.5), 0.2)
    two_stage = TwoStageService().step_scalar(p, State(0.0, 1.5), 0.2, WeightPolicy(c=0.0))
    assert abs(two_stage.u - rk4.u) > 1e-8

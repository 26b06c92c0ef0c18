import math

import numpy as np
import pytest

from core.exceptions import UnsupportedModeError, ValidationError, WeightDegeneracyError
from model.enums import WeightModeEnum
from model.trajectory_model import MethodSpec
from model.weight_model import WeightPolicy
from service.experiment.problem_factory import build_problem
from service.experiment.reference_values import CONVERGENCE_TABLE
from service.integrator import IntegrateService


def test_time_grid_shortens_last_step():
    np.testing.assert_allclose(IntegrateService.time_grid(0.0, 1.0, 0.3), [0.0, 0.3, 0.6, 0.9, 1.0])


def test_time_grid_commensurate_step():
    grid = IntegrateService.time_grid(0.0, 1.0, 0.1)
    assert grid.size == 11
    assert grid[-1] == 1.0
    assert grid[3] == 0.1 * 3


def test_exp_decay_reaches_horizon(linear_scalar):
    method = MethodSpec.two_stage(WeightPolicy(c=1.0))
    traj = IntegrateService().integrate(linear_scalar(-1.0), 1.0, 0.0, 4.0, 0.1, method)
    assert not traj.blew_up
    assert traj.final.t == 4.0
    assert math.isclose(traj.final.u, math.exp(-4.0), rel_tol=1e-6)
    assert len(traj.records) == 40


def test_records_carry_weights(linear_scalar):
    tau, lam, c = 0.5, -2.0, 0.6
    traj = IntegrateService().integrate(linear_scalar(lam), 1.0, 0.0, 1.0, tau, MethodSpec.two_stage(WeightPolicy(c=c)))
    x = tau * lam
    for record in traj.records:
        assert math.isclose(record.alpha_used, 1.0 / 3.0 + c / 60.0 * x**3)
        assert record.beta_used == 2.0 / 3.0


def test_rk4_keeps_no_records(linear_scalar):
    traj = IntegrateService().integrate(linear_scalar(-1.0), 1.0, 0.0, 1.0, 0.25, MethodSpec.rk4())
    assert traj.records == []
    assert traj.method_tag == "rk4"


def test_zero_length_interval(linear_scalar):
    traj = IntegrateService().integrate(linear_scalar(-1.0), 2.0, 1.0, 1.0, 0.1, MethodSpec.rk4())
    assert len(traj.states) == 1
    assert traj.final.u == 2.0


def test_stiff_linear_blows_up_past_stability_edge():
    setup = build_problem("stiff-linear")
    method = MethodSpec.two_stage(WeightPolicy(c=0.0))
    traj = IntegrateService().integrate(setup.problem, setup.u0, 0.0, setup.horizon, 0.01, method)
    assert traj.blew_up
    assert traj.blow_up_step is not None
    assert traj.final.t < setup.horizon
    assert all(np.isfinite(s.u) for s in traj.states)


def test_lorenz_blow_up_keeps_finite_prefix():
    setup = build_problem("lorenz")
    method = MethodSpec.two_stage(WeightPolicy(c=0.0))
    traj = IntegrateService().integrate(setup.problem, setup.u0, 0.0, 10.0, 0.0625, method)
    assert traj.blew_up
    assert np.all(np.isfinite(traj.values))


@pytest.mark.parametrize("tau", [0.0, -0.1, float("nan")])
def test_invalid_step_rejected(linear_scalar, tau):
    with pytest.raises(ValidationError):
        IntegrateService().integrate(linear_scalar(-1.0), 1.0, 0.0, 1.0, tau, MethodSpec.rk4())


def test_reversed_interval_rejected(linear_scalar):
    with pytest.raises(ValidationError):
        IntegrateService().integrate(linear_scalar(-1.0), 1.0, 1.0, 0.0, 0.1, MethodSpec.rk4())


def test_beta_shift_rejected_for_systems():
    setup = build_problem("spring")
    method = MethodSpec.two_stage(WeightPolicy(c=1.0, mode=WeightModeEnum.BETA_SHIFT))
    with pytest.raises(UnsupportedModeError):
        IntegrateService().integrate(setup.problem, setup.u0, 0.0, 1.0, 0.01, method)


def test_degeneracy_reports_step_index(linear_scalar):
    tau = 40.0 ** (1.0 / 3.0)
    method = MethodSpec.two_stage(WeightPolicy(c=1.0, mode=WeightModeEnum.BETA_SHIFT))
    with pytest.raises(WeightDegeneracyError) as info:
        IntegrateService().integrate(linear_scalar(-1.0), 1.0, 0.0, 3.0 * tau, tau, method)
    assert info.value.step_index == 0


def test_accumulated_clock_keeps_step_count():
    setup = build_problem("spring")
    method = MethodSpec.two_stage(WeightPolicy(c=0.5))
    tau = 2.0 / 1437
    grid = IntegrateService().integrate(setup.problem, setup.u0, 0.0, 2.0, tau, method, keep_records=False)
    summed = IntegrateService().integrate(
        setup.problem, setup.u0, 0.0, 2.0, tau, method, keep_records=False, accumulate_time=True
    )
    assert len(grid.states) == len(summed.states) == 1438
    assert grid.final.t == 2.0
    assert summed.final.t == pytest.approx(2.0, abs=1e-12)


def test_accumulated_clock_shortens_final_step(linear_scalar):
    traj = IntegrateService().integrate(linear_scalar(-1.0), 1.0, 0.0, 1.0, 0.3, MethodSpec.rk4(), accumulate_time=True)
    assert len(traj.states) == 5
    assert traj.final.t == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize("c", sorted(CONVERGENCE_TABLE))
def test_alpha_and_beta_shift_agree_on_exp_decay(c):
    setup = build_problem("exp-decay")
    tau0 = CONVERGENCE_TABLE[c][0]
    for level in range(6):
        tau = tau0 / 2**level
        finals = [
            IntegrateService().integrate(
                setup.problem,
                setup.u0,
                0.0,
                setup.horizon,
                tau,
                MethodSpec.two_stage(WeightPolicy(c=c, mode=mode)),
                keep_records=False,
            ).final.u
            for mode in (WeightModeEnum.ALPHA_SHIFT, WeightModeEnum.BETA_SHIFT)
        ]
        assert abs(finals[0] - finals[1]) <= 1e-13 * max(abs(finals[0]), abs(finals[1]))

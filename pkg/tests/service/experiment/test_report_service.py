import math

from model.trajectory_model import MethodSpec
from model.weight_model import WeightPolicy
from service.experiment.problem_factory import build_problem
from service.experiment.report_service import ReportService, sample_indices, variable_names
from service.integrator import IntegrateService

reports = ReportService()


def _exp_decay(tau: float, t_end: float = 4.0):
    setup = build_problem("exp-decay")
    method = MethodSpec.two_stage(WeightPolicy())
    traj = IntegrateService().integrate(setup.problem, setup.u0, 0.0, t_end, tau, method)
    return setup, traj


def test_variable_names():
    assert variable_names(1) == ["u"]
    assert variable_names(2) == ["p", "q"]
    assert variable_names(3) == ["x", "y", "z"]


def test_sample_takes_last_node_not_after_time():
    _, traj = _exp_decay(0.3, 1.0)
    assert sample_indices(traj, [0.5, 0.9, 1.0]) == [1, 3, 4]


def test_rows_use_node_time():
    setup, traj = _exp_decay(0.3, 1.0)
    (row,) = reports.error_rows(setup, traj, [0.5])
    assert row.t == traj.states[1].t
    assert row.steps == 1
    assert row.errors[0] == abs(traj.states[1].u - math.exp(-row.t)) / math.exp(-row.t)
    assert not row.divergent


def test_rows_after_blow_up_are_divergent():
    setup = build_problem("stiff-linear")
    method = MethodSpec.two_stage(WeightPolicy())
    traj = IntegrateService().integrate(setup.problem, setup.u0, 0.0, 4.0, 0.01, method)
    rows = reports.error_rows(setup, traj, [3.0, 4.0])
    assert all(r.divergent and r.errors == [None] for r in rows)


def test_reference_lookup_adds_deviation():
    setup, traj = _exp_decay(0.5)
    (row,) = reports.error_rows(setup, traj, [4.0], reference=lambda t: (2.0 * 1e-6,))
    assert row.reference == [2e-6]
    assert row.deviation[0] == abs(row.errors[0] - 2e-6) / 2e-6


def test_series_covers_every_node():
    setup, traj = _exp_decay(0.5)
    times, series = reports.series_errors(setup, traj)
    assert len(series) == len(traj.states) == times.size
    assert series[0] == 0.0

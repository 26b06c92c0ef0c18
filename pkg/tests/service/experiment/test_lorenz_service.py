import math

import pytest

from model.enums import MethodKindEnum, ProblemIdEnum
from schema.experiment.experiment_schema import ExperimentSpecSchema
from service.experiment import LorenzService

lorenz = LorenzService()
SPEC = ExperimentSpecSchema(problem_id=ProblemIdEnum.LORENZ)


@pytest.mark.parametrize(
    "c, tau, t, err_x",
    [
        (0.0, 0.04, 1.0, 6.7015e-02),
        (0.5, 0.0625, 10.0, 1.0853e-04),
    ],
)
def test_two_stage_error_magnitude(c, tau, t, err_x):
    report, traj = lorenz.run(SPEC, tau, c)
    assert not traj.blew_up
    row = next(r for r in report.rows if math.isclose(r.t, t, abs_tol=1e-9))
    assert abs(math.log10(row.errors[0]) - math.log10(err_x)) < 0.5
    assert row.reference is not None


def test_rk4_error_magnitude():
    spec = ExperimentSpecSchema(problem_id=ProblemIdEnum.LORENZ, method=MethodKindEnum.RK4)
    report, _ = lorenz.run(spec, 0.01)
    row = report.rows[4]
    assert row.t == pytest.approx(5.0)
    assert abs(math.log10(row.errors[0]) - math.log10(4.1519e-06)) < 0.5
    assert report.c is None


@pytest.mark.parametrize("c", [0.0, 1.0])
def test_large_step_blows_up(c):
    report, traj = lorenz.run(SPEC, 0.0625, c)
    assert traj.blew_up
    assert report.rows[-1].divergent
    assert len(report.rows) == 10

import math

import numpy as np
import pytest

from model.enums import MethodKindEnum, ProblemIdEnum
from schema.experiment.experiment_schema import ExperimentSpecSchema
from service.experiment import DEFAULT_PARAMS, SPRING_SAMPLE_TIMES, SpringService, build_problem, table_tau
from service.experiment.problem_factory import spring_modes
from service.experiment.reference_values import SPRING_TABLE

spring = SpringService()


def _spec(c: float) -> ExperimentSpecSchema:
    return ExperimentSpecSchema(problem_id=ProblemIdEnum.SPRING, c=c)


def test_table_step():
    assert table_tau() == 2.0 / 1437


def test_modes_of_default_oscillator():
    stiff, slow = spring_modes(DEFAULT_PARAMS[ProblemIdEnum.SPRING])
    assert stiff == pytest.approx(-1000.0, rel=1e-15)
    assert slow == pytest.approx(-1.0, rel=1e-15)


def test_exact_solution_is_slow_mode():
    exact = build_problem("spring").problem.exact
    for t in (0.0, 0.5, 16.0):
        assert np.allclose(exact(t), [-math.exp(-t), math.exp(-t)], rtol=1e-14, atol=0.0)


def test_exact_solution_with_critical_damping():
    # r² + 2r + 1: двойной корень −1
    setup = build_problem("spring", {"m": 1.0, "c": 2.0, "k": 1.0, "p0": 0.0, "q0": 1.0})
    t = 1.5
    p, q = setup.problem.exact(t)
    assert q == pytest.approx((1.0 + t) * math.exp(-t), rel=1e-14)
    assert p == pytest.approx(-t * math.exp(-t), rel=1e-14)


def test_exact_solution_satisfies_system():
    setup = build_problem("spring", {"p0": 2.0, "q0": 1.0})
    exact, rhs = setup.problem.exact, setup.problem.rhs
    assert np.allclose(exact(0.0), [2.0, 1.0], rtol=1e-13)
    h, t = 1e-6, 0.01
    derivative = (exact(t + h) - exact(t - h)) / (2.0 * h)
    assert np.allclose(derivative, rhs(t, exact(t)), rtol=1e-6)


@pytest.mark.parametrize("c", [0.5, 1.0])
def test_published_table_reproduced(c):
    report = spring.run(_spec(c))
    assert report.tau == table_tau()
    assert [row.t for row in report.rows] == pytest.approx(SPRING_SAMPLE_TIMES, abs=1e-9)
    published = SPRING_TABLE[c]
    assert len(report.rows) == len(published)
    for row, (_, steps, err_p, err_q) in zip(report.rows, published):
        assert row.steps == steps
        assert not row.divergent
        assert row.reference == [err_p, err_q]
        # совпадение по порядку величины: ±0.5 декады
        for err, ref in zip(row.errors, (err_p, err_q)):
            assert abs(math.log10(err) - math.log10(ref)) < 0.5


def test_aligned_step_counts():
    n = [round(2.0 / spring.aligned_stable_tau(_spec(c))) for c in (0.0, 0.5, 1.0)]
    assert n == [719, 340, 622]


@pytest.mark.parametrize("c", [0.0, 1.0])
def test_aligned_step_is_stable(c):
    tau = spring.aligned_stable_tau(_spec(c))
    assert tau <= spring.biggest_stable_tau(_spec(c))
    _, divergent = spring.growth(_spec(c), tau)
    assert not divergent


def test_half_weight_grows_at_biggest_step():
    spec = _spec(0.5)
    tau = spring.biggest_stable_tau(spec)
    assert tau == pytest.approx(0.005893, abs=2e-6)
    _, divergent = spring.growth(spec, tau)
    assert divergent


def test_step_past_edge_diverges():
    spec = _spec(0.0)
    _, divergent = spring.growth(spec, 1.2 * spring.biggest_stable_tau(spec))
    assert divergent


def test_rk4_has_no_published_reference():
    spec = ExperimentSpecSchema(problem_id=ProblemIdEnum.SPRING, method=MethodKindEnum.RK4, horizon=4.0)
    report = spring.run(spec)
    assert report.c is None
    assert all(row.reference is None for row in report.rows)
    assert len(report.rows) == 2

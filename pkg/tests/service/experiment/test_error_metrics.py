import numpy as np
import pytest

from service.experiment.error_metrics import (
    classify_growth,
    error_envelope,
    growth_slope,
    observed_order,
    relative_deviation,
    relative_errors,
)


def test_relative_errors_per_component():
    errors = relative_errors([2.0, -4.0], [2.2, -4.0])
    assert errors[0] == pytest.approx(0.1)
    assert errors[1] == 0.0


def test_non_finite_error_is_none():
    assert relative_errors(1.0, float("nan")) == [None]
    assert relative_errors(0.0, 1.0) == [None]


def test_relative_deviation():
    assert relative_deviation(1.1e-6, 1e-6) == pytest.approx(0.1)
    assert relative_deviation(None, 1e-6) is None
    assert relative_deviation(1e-6, 0.0) is None


def test_observed_order():
    assert observed_order(1.6e-3, 1e-4) == pytest.approx(4.0)
    assert observed_order(None, 1e-4) is None
    assert observed_order(1e-3, 0.0) is None


def test_envelope_removes_dips():
    env = error_envelope([1e-8, 1e-12, 2e-8, None])
    assert list(env[:3]) == [1e-8, 1e-8, 2e-8]
    assert env[3] == np.inf


def test_growth_slope_uses_final_quarter():
    t = np.linspace(0.0, 4.0, 401)
    # до t = 3 ошибка постоянна, затем растёт на 2 декады за единицу времени
    err = np.where(t < 3.0, 1e-10, 1e-10 * 10.0 ** (2.0 * (t - 3.0)))
    assert growth_slope(t, list(err)) == pytest.approx(2.0, rel=1e-6)


def test_growth_slope_ignores_missing_values():
    t = [0.0, 1.0, 2.0, 3.0, 4.0]
    assert growth_slope(t, [1.0, 1.0, 1.0, None, None]) is None


def test_oscillating_error_is_stable():
    t = np.linspace(0.0, 10.0, 1001)
    # относительная ошибка проваливается у нулей решения
    err = 1e-8 * (np.abs(np.sin(5.0 * t)) + 1e-6)
    slope, divergent = classify_growth(t, list(err), blew_up=False)
    assert not divergent
    assert slope == pytest.approx(0.0, abs=1e-3)


def test_rounding_noise_below_floor_is_stable():
    t = np.linspace(0.0, 4.0, 401)
    err = 1e-16 * 10.0 ** (3.0 * t / 4.0)
    assert classify_growth(t, list(err), blew_up=False) == (pytest.approx(0.75), False)


def test_error_above_cap_is_divergent():
    t = np.linspace(0.0, 4.0, 401)
    err = np.full(t.size, 5e-2)
    _, divergent = classify_growth(t, list(err), blew_up=False)
    assert divergent


def test_steady_growth_is_divergent():
    t = np.linspace(0.0, 4.0, 401)
    err = 1e-9 * 10.0 ** (0.5 * t)
    slope, divergent = classify_growth(t, list(err), blew_up=False)
    assert slope == pytest.approx(0.5, rel=1e-6)
    assert divergent


def test_missing_error_or_blow_up_is_divergent():
    t = [0.0, 1.0, 2.0, 3.0]
    assert classify_growth(t, [1e-9, 1e-9, None, None], blew_up=False)[1]
    assert classify_growth(t, [1e-9] * 4, blew_up=True)[1]
    assert not classify_growth(t, [1e-9] * 4, blew_up=False)[1]

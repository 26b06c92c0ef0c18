"""
ErrorMetrics — относительные ошибки, порядки и классификация роста.

## Бизнес-контекст
err(u) = |u(T) − u_τ(T)| / |u(T)| по каждой переменной.
Наблюдаемый порядок на уровне k: log2(err_{k−1}/err_k).

## Классификация роста
1. Разнос траектории или None в ряду ошибок — дивергенция
2. Огибающая: накопленный максимум ошибки от t0 (убирает провалы
   относительной ошибки у нулей решения)
3. Окно: последняя доля GROWTH_WINDOW_FRACTION отрезка времени
4. Максимум в окне ≥ GROWTH_ERROR_CAP — дивергенция
5. Огибающая в окне < GROWTH_ERROR_FLOOR — устойчиво (шум округления)
6. Иначе наклон МНК log10(огибающей) выше GROWTH_SLOPE_THRESHOLD
   декад на единицу времени — дивергенция
"""

import math
from typing import Optional, Sequence

import numpy as np

from core.config import configs


def relative_errors(exact, approx) -> list[Optional[float]]:
    """Покомпонентная относительная ошибка; неконечные значения → None."""
    exact = np.atleast_1d(np.asarray(exact, dtype=float))
    approx = np.atleast_1d(np.asarray(approx, dtype=float))
    with np.errstate(divide="ignore", invalid="ignore"):
        err = np.abs(exact - approx) / np.abs(exact)
    return [float(e) if np.isfinite(e) else None for e in err]


def relative_deviation(value: Optional[float], reference: Optional[float]) -> Optional[float]:
    """|value − reference| / |reference| против опубликованного значения."""
    if value is None or reference is None or reference == 0.0:
        return None
    return abs(value - reference) / abs(reference)


def observed_order(previous: Optional[float], current: Optional[float]) -> Optional[float]:
    """log2(previous/current) или None, если значение недоступно."""
    if previous is None or current is None or previous <= 0.0 or current <= 0.0:
        return None
    return math.log2(previous / current)


def error_envelope(errors: Sequence[Optional[float]]) -> np.ndarray:
    """Накопленный максимум ошибки; None и неконечные значения дают inf."""
    e = np.array([np.inf if v is None else v for v in errors], dtype=float)
    e[~np.isfinite(e)] = np.inf
    return np.maximum.accumulate(e) if e.size else e


def _window_mask(t: np.ndarray, fraction: float) -> np.ndarray:
    start = t[0] + (1.0 - fraction) * (t[-1] - t[0])
    return t >= start


def growth_slope(
    times: Sequence[float],
    errors: Sequence[Optional[float]],
    fraction: float | None = None,
) -> Optional[float]:
    """
    Наклон МНК log10(огибающей ошибки) по t на последней доле отрезка времени.

    ## Выходные данные
    - наклон (декады на единицу времени) или None, если в окне меньше двух
      положительных конечных точек
    """
    fraction = configs.GROWTH_WINDOW_FRACTION if fraction is None else fraction
    t = np.asarray(times, dtype=float)
    if t.size < 2:
        return None
    env = error_envelope(errors)
    mask = _window_mask(t, fraction) & np.isfinite(env) & (env > 0.0)
    if mask.sum() < 2:
        return None
    slope, _ = np.polyfit(t[mask], np.log10(env[mask]), 1)
    return float(slope)


def classify_growth(
    times: Sequence[float],
    errors: Sequence[Optional[float]],
    blew_up: bool,
    fraction: float | None = None,
) -> tuple[Optional[float], bool]:
    """
    Классификация ряда ошибок на устойчивый/дивергентный.

    ## Входные данные
    - times, errors: узлы траектории и максимальная по компонентам ошибка
    - blew_up: траектория оборвалась на неконечном состоянии

    ## Выходные данные
    - (наклон огибающей или None, признак дивергенции)
    """
    fraction = configs.GROWTH_WINDOW_FRACTION if fraction is None else fraction
    slope = growth_slope(times, errors, fraction)
    if blew_up or any(v is None or not math.isfinite(v) for v in errors):
        return slope, True

    t = np.asarray(times, dtype=float)
    if t.size < 2:
        return slope, False
    window = _window_mask(t, fraction)
    e = np.asarray(errors, dtype=float)
    if float(np.max(e[window])) >= configs.GROWTH_ERROR_CAP:
        return slope, True
    if float(np.max(error_envelope(errors)[window])) < configs.GROWTH_ERROR_FLOOR:
        return slope, False
    return slope, slope is not None and slope > configs.GROWTH_SLOPE_THRESHOLD

"""
IntervalService — интервал абсолютной устойчивости I(C) на вещественной оси.

## Бизнес-контекст
Форма I(C) зависит от режима C:
- C ≤ 0: f выпукла при z < 0, I = [z*, 0], f(z*) = 1
- 0 < C < C₁: локальный максимум f выше 1, I = [z¹, z²] ∪ [z³, 0],
  f(z¹) = −1, f(z²) = f(z³) = 1
- C₁ ≤ C < C₂ и C ≥ C₂: f ≤ 1 при z < 0, I = [z*, 0], f(z*) = −1
Критические константы: (z₁, C₁) — касание f = 1 в локальном максимуме,
(z₂, C₂) — слияние корней f_z и f_zz.

## Обработка
Все корни ищутся бисекцией с отрезками локализации из анализа случаев,
без итераций по производной.

## Исключения
- CaseClassificationError: отрезок локализации не найден
- InternalConsistencyError: замкнутые формулы констант не прошли проверку
"""

import logging
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from core.config import configs
from core.exceptions import CaseClassificationError, InternalConsistencyError, ValidationError
from model.enums import StabilityCaseEnum
from model.stability_model import IntervalSet
from service.stability.stability_function_service import StabilityFunctionService

logger = logging.getLogger(__name__)

MAX_DOUBLINGS = 200
INITIAL_STEP = 0.5
CONSTANTS_TOLERANCE = 1e-12


def bisect(fn: Callable[[float], float], lo: float, hi: float, tol: Optional[float] = None) -> float:
    """
    Корень fn на [lo, hi] бисекцией, |hi − lo| ≤ tol.

    ## Исключения
    - ValidationError: знаки на концах совпадают
    """
    tol = configs.ROOT_TOLERANCE if tol is None else tol
    f_lo, f_hi = fn(lo), fn(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0.0) == (f_hi > 0.0):
        raise ValidationError(f"Нет смены знака на [{lo!r}, {hi!r}]")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        f_mid = fn(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def expand_left(
    fn: Callable[[float], float],
    hi: float,
    c: float,
    what: str,
    step: float = INITIAL_STEP,
) -> tuple[float, float]:
    """
    Отрезок [lo, hi'] со сменой знака fn левее hi (шаг удваивается).

    ## Исключения
    - CaseClassificationError: смена знака не найдена за MAX_DOUBLINGS удвоений
    """
    positive = fn(hi) > 0.0
    right = hi
    for _ in range(MAX_DOUBLINGS):
        lo = hi - step
        if (fn(lo) > 0.0) != positive:
            return lo, right
        right = lo
        step *= 2.0
    raise CaseClassificationError(c, f"не найдена смена знака {what} левее {hi!r}")


@lru_cache(maxsize=1)
def _closed_form_constants() -> tuple[float, float, float, float]:
    r1 = float(np.cbrt(64.0 + 9.0 * np.sqrt(67.0)))
    z1 = -2.0 * r1 / 3.0 + 22.0 / (3.0 * r1) - 8.0 / 3.0
    c1 = (-24.0 - 24.0 * z1 - 12.0 * z1**2 - 4.0 * z1**3) / z1**4

    r2 = float(np.cbrt(2.0 + 2.0 * np.sqrt(3.0)))
    z2 = -r2 + 2.0 / r2 - 2.0
    c2 = (-6.0 - 6.0 * z2 - 3.0 * z2**2) / z2**3
    return z1, c1, z2, c2


class IntervalService:
    """Интервал I(C), режимы C и критические константы."""

    def __init__(self, function_service: Optional[StabilityFunctionService] = None):
        self._f = function_service or StabilityFunctionService()

    def _root_left(self, fn: Callable[[float], float], hi: float, c: float, what: str) -> float:
        lo, right = expand_left(fn, hi, c, what)
        return bisect(fn, lo, right)

    def critical_constants(self) -> tuple[float, float, float, float]:
        """
        Критические константы (z₁, C₁, z₂, C₂) по замкнутым формулам.

        ## Обработка
        z₁ — вещественный корень z³ + 8z² + 36z + 96 = 0,
        C₁ = (−24 − 24z₁ − 12z₁² − 4z₁³)/z₁⁴;
        z₂ — вещественный корень z³ + 6z² + 18z + 24 = 0,
        C₂ = (−6 − 6z₂ − 3z₂²)/z₂³.
        Проверка: f_z(z₁,C₁) = 0, f(z₁,C₁) = 1, f_z(z₂,C₂) = 0, f_zz(z₂,C₂) = 0 с точностью 1e-12.

        ## Исключения
        - InternalConsistencyError: проверка не пройдена
        """
        z1, c1, z2, c2 = _closed_form_constants()
        residuals = {
            "f_z(z1, C1)": self._f.fz(c1, z1),
            "f(z1, C1) - 1": self._f.f(c1, z1) - 1.0,
            "f_z(z2, C2)": self._f.fz(c2, z2),
            "f_zz(z2, C2)": self._f.fzz(c2, z2),
        }
        for name, value in residuals.items():
            if not abs(value) <= CONSTANTS_TOLERANCE:
                raise InternalConsistencyError(f"Проверка критических констант: {name} = {value!r}")

        logger.debug("Критические константы: z1=%r, C1=%r, z2=%r, C2=%r", z1, c1, z2, c2)
        return z1, c1, z2, c2

    def classify_case(self, c: float) -> StabilityCaseEnum:
        """Режим C: (−∞,0], (0,C₁), [C₁,C₂), [C₂,∞)."""
        if not np.isfinite(c):
            raise ValidationError(f"--C: C должна быть конечной, получено {c!r}")
        _, c1, _, c2 = self.critical_constants()
        if c <= 0.0:
            return StabilityCaseEnum.CONVEX
        if c < c1:
            return StabilityCaseEnum.DISCONNECTED
        if c < c2:
            return StabilityCaseEnum.TANGENT
        return StabilityCaseEnum.MONOTONE

    def inflection_point(self, c: float) -> float:
        """Единственный отрицательный корень f_zz(·, C) при C > 0."""
        if not c > 0.0:
            raise ValidationError(f"--C: точка перегиба определена только при C > 0, получено {c!r}")
        return self._root_left(lambda z: self._f.fzz(c, z), 0.0, c, "f_zz")

    def fz_at_inflection(self, c: float) -> float:
        """f_z(z*_{f_zz}(C), C); отрицательна при C ∈ (0, 0.5)."""
        return float(self._f.fz(c, self.inflection_point(c)))

    def stability_interval(self, c: float) -> IntervalSet:
        """
        Интервал абсолютной устойчивости I(C).

        ## Входные данные
        - c: константа C

        ## Обработка
        1. Классификация режима C
        2. Поиск корней f = ±1 бисекцией в отрезках из анализа случаев

        ## Выходные данные
        - IntervalSet с одним или двумя отрезками; правый всегда заканчивается в 0

        ## Исключения
        - CaseClassificationError
        """
        case = self.classify_case(c)
        f = self._f

        def f_minus_one(z):
            return f.f(c, z) - 1.0

        def f_plus_one(z):
            return f.f(c, z) + 1.0

        def fz(z):
            return f.fz(c, z)

        if case == StabilityCaseEnum.CONVEX:
            z_min = self._root_left(fz, 0.0, c, "f_z")
            z_star = self._root_left(f_minus_one, z_min, c, "f - 1")
            intervals = ((z_star, 0.0),)

        elif case == StabilityCaseEnum.DISCONNECTED:
            z_fzz = self.inflection_point(c)
            if not fz(z_fzz) < 0.0:
                raise CaseClassificationError(c, "f_z в точке перегиба неотрицательна")
            z_fz2 = bisect(fz, z_fzz, 0.0)
            z_fz1 = self._root_left(fz, z_fzz, c, "f_z")
            if not f_minus_one(z_fz1) > 0.0:
                raise CaseClassificationError(c, "локальный максимум f не выше 1")
            z3 = bisect(f_minus_one, z_fz1, z_fz2)
            z2 = self._root_left(f_minus_one, z_fz1, c, "f - 1")
            z1 = self._root_left(f_plus_one, z2, c, "f + 1")
            intervals = ((z1, z2), (z3, 0.0))

        else:
            z_star = self._root_left(f_plus_one, 0.0, c, "f + 1")
            intervals = ((z_star, 0.0),)

        logger.debug("I(C=%r): случай %s, отрезки %r", c, case.value, intervals)
        return IntervalSet(intervals=tuple((float(lo), float(hi)) for lo, hi in intervals), case=case)

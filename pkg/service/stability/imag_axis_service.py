"""
ImagAxisService — пересечение области устойчивости с мнимой осью.

## Бизнес-контекст
Для z = iζ, η = ζ²: |f(iζ, C)|² − 1 = η³·g(η, C)/14400, поэтому
|f(iζ, C)| ≤ 1 ⇔ η = 0 или g(η, C) ≤ 0. Корни g — η₋ ≤ η₊.

## Обработка
- C = 0: g линейна, η ≤ 8, отрезок [−2√2, 2√2]
- C ≤ 5/6: η₋ ≤ 0 ≤ η₊, отрезок [−√η₊, √η₊]
- 5/6 < C < 5/4: две полосы [√η₋, √η₊] (симметрично) и точка 0
- C = 5/4: двойной корень η = 8, точки {−2√2, 0, 2√2}
- C > 5/4: Δ < 0, только {0}
Корни считаются устойчивой формой q = −(b + sign(b)√Δ)/2, η = q/a, c₀/q.
"""

import math
from typing import Optional

from model.enums import ImagKindEnum
from model.stability_model import ImagIntersection
from service.stability.stability_function_service import StabilityFunctionService

UPPER_SYMMETRIC = 5.0 / 6.0
THREE_POINT_C = 5.0 / 4.0


class ImagAxisService:
    """Пересечение R_A(C) с мнимой осью."""

    def __init__(self, function_service: Optional[StabilityFunctionService] = None):
        self._f = function_service or StabilityFunctionService()

    def imag_roots(self, c: float) -> tuple[float, float]:
        """
        Корни (η₋, η₊) квадратного g(η, C) при C ≠ 0 и Δ ≥ 0.

        ## Исключения
        - ValueError: C = 0 или Δ < 0
        """
        if c == 0.0:
            raise ValueError("g(η, 0) линейна")
        a = c * c
        b = 5.0 * (5.0 - 8.0 * c)
        c0 = 40.0 * (6.0 * c - 5.0)
        delta = self._f.imag_discriminant(c)
        if delta < 0.0:
            raise ValueError(f"Δ = {delta!r} < 0")
        sign = 1.0 if b >= 0.0 else -1.0
        q = -0.5 * (b + sign * math.sqrt(delta))
        first = q / a
        second = c0 / q if q != 0.0 else first
        return min(first, second), max(first, second)

    def imag_axis_intersection(self, c: float) -> ImagIntersection:
        """
        Пересечение R_A(C) с мнимой осью.

        ## Входные данные
        - c: константа C

        ## Выходные данные
        - ImagIntersection с видом и неотрицательными концами ζ
        """
        if c == 0.0:
            return ImagIntersection(c=c, kind=ImagKindEnum.SYMMETRIC_INTERVAL, endpoints=(2.0 * math.sqrt(2.0),))

        if c <= UPPER_SYMMETRIC:
            _, eta_plus = self.imag_roots(c)
            return ImagIntersection(c=c, kind=ImagKindEnum.SYMMETRIC_INTERVAL, endpoints=(math.sqrt(eta_plus),))

        if c < THREE_POINT_C:
            eta_minus, eta_plus = self.imag_roots(c)
            return ImagIntersection(
                c=c,
                kind=ImagKindEnum.TWO_BANDS_PLUS_ORIGIN,
                endpoints=(math.sqrt(eta_minus), math.sqrt(eta_plus)),
            )

        if c == THREE_POINT_C:
            eta, _ = self.imag_roots(c)
            return ImagIntersection(c=c, kind=ImagKindEnum.THREE_POINTS, endpoints=(math.sqrt(eta),))

        return ImagIntersection(c=c, kind=ImagKindEnum.ORIGIN_ONLY, endpoints=())

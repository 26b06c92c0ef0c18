"""
StabilityModel — value objects анализа абсолютной устойчивости.

## Бизнес-контекст
Функция устойчивости f(z, C) = 1 + z + z²/2 + z³/6 + z⁴/24 + (C/120)z⁵
описывает множитель схемы на модельной задаче u' = λu, z = τλ.
Здесь собраны результаты её анализа: интервал на вещественной оси,
пересечение с мнимой осью и линия |f| = 1.
"""

from dataclasses import dataclass, field

import numpy as np

from core.exceptions import ValidationError
from model.enums import ImagKindEnum, LocusRegionEnum, StabilityCaseEnum


@dataclass(frozen=True)
class IntervalSet:
    """Упорядоченные непересекающиеся отрезки [lo, hi] на R, hi ≤ 0."""

    intervals: tuple[tuple[float, float], ...]
    case: StabilityCaseEnum | None = None

    def __post_init__(self):
        prev_hi = -np.inf
        for lo, hi in self.intervals:
            if not (lo <= hi <= 0.0) or lo <= prev_hi:
                raise ValidationError(
                    f"Некорректный набор интервалов: {self.intervals!r}"
                )
            prev_hi = hi

    @property
    def left_endpoint(self) -> float:
        return self.intervals[0][0]

    def contains(self, x: float) -> bool:
        return any(lo <= x <= hi for lo, hi in self.intervals)

    def as_lists(self) -> list[list[float]]:
        return [[lo, hi] for lo, hi in self.intervals]


@dataclass(frozen=True)
class ImagIntersection:
    """
    Пересечение R_A(C) с мнимой осью z = iζ.

    ## Поля
    - kind: форма пересечения
    - endpoints: неотрицательные ζ, определяющие множество
      SYMMETRIC_INTERVAL: (b,) → [−b, b]
      TWO_BANDS_PLUS_ORIGIN: (a, b) → [−b, −a] ∪ {0} ∪ [a, b]
      THREE_POINTS: (b,) → {−b, 0, b}
      ORIGIN_ONLY: () → {0}
    """

    c: float
    kind: ImagKindEnum
    endpoints: tuple[float, ...] = ()

    def contains(self, zeta: float, atol: float = 0.0) -> bool:
        a = abs(zeta)
        if a <= atol:
            return True
        if self.kind == ImagKindEnum.SYMMETRIC_INTERVAL:
            return a <= self.endpoints[0] + atol
        if self.kind == ImagKindEnum.TWO_BANDS_PLUS_ORIGIN:
            lo, hi = self.endpoints
            return lo - atol <= a <= hi + atol
        if self.kind == ImagKindEnum.THREE_POINTS:
            return abs(a - self.endpoints[0]) <= atol
        return False

    def signed_points(self) -> list[float]:
        """Все граничные точки ζ с обоими знаками, по возрастанию."""
        pts = {0.0}
        for e in self.endpoints:
            pts.add(e)
            pts.add(-e)
        return sorted(pts)


@dataclass(frozen=True)
class GridSpec:
    """Равномерная сетка в комплексной плоскости."""

    re_min: float = -7.0
    re_max: float = 2.0
    im_min: float = -5.0
    im_max: float = 5.0
    nx: int = 1401
    ny: int = 1001

    def __post_init__(self):
        if self.nx < 2 or self.ny < 2:
            raise ValidationError("--grid: сетка должна иметь хотя бы 2×2 узла")
        if not (self.re_min < self.re_max and self.im_min < self.im_max):
            raise ValidationError("--grid: пустой прямоугольник сетки")

    def covers(self, re_min: float, re_max: float, im_min: float, im_max: float) -> bool:
        return (
            self.re_min <= re_min
            and self.re_max >= re_max
            and self.im_min <= im_min
            and self.im_max >= im_max
        )

    def axes(self) -> tuple[np.ndarray, np.ndarray]:
        return (
            np.linspace(self.re_min, self.re_max, self.nx),
            np.linspace(self.im_min, self.im_max, self.ny),
        )


@dataclass(frozen=True, eq=False)
class BoundaryLocus:
    """
    Линия |f(z, C)| = 1 на сетке.

    ## Поля
    - points: комплексные точки, | |f| − 1 | ≤ tolerance
    - segments: пары индексов в points (отрезки marching squares)
    - grid: сетка, на которой извлечена линия
    """

    c: float
    points: np.ndarray
    segments: np.ndarray
    grid: GridSpec
    tolerance: float
    rejected: int = 0
    meta: dict = field(default_factory=dict)

    def stable_side(self) -> np.ndarray:
        """Точки с Re z ≤ 0 (граница R_A(C) в принятом определении)."""
        return self.points[self.points.real <= 0.0]

    def region_points(self, region: LocusRegionEnum = LocusRegionEnum.FULL) -> np.ndarray:
        if LocusRegionEnum(region) == LocusRegionEnum.STABLE:
            return self.stable_side()
        return self.points

"""
LocusService — линия |f(z, C)| = 1 методом marching squares.

## Бизнес-контекст
Граница области абсолютной устойчивости. Извлекается на равномерной сетке
по знаку φ = |f| − 1 в узлах; точка на ребре со сменой знака сначала
берётся линейной интерполяцией, затем уточняется одномерным методом Ньютона
вдоль ребра с защитой бисекцией, до | |f| − 1 | ≤ LOCUS_TOLERANCE.

## Входные данные
- c: константа C
- grid: GridSpec (по умолчанию 1401×1001 на [−7,2]×[−5,5])

## Выходные данные
- BoundaryLocus: точки, отрезки (пары индексов), сетка

## Исключения
- ValidationError: сетка не покрывает [−7,2]×[−5,5]
- InternalConsistencyError: пустая линия (z = 0 всегда на ней)
"""

import logging
from typing import Optional

import numpy as np

from core.config import configs
from core.exceptions import InternalConsistencyError, ValidationError
from model.stability_model import BoundaryLocus, GridSpec
from service.stability.stability_function_service import StabilityFunctionService

logger = logging.getLogger(__name__)

REQUIRED_BOX = (-7.0, 2.0, -5.0, 5.0)
NEWTON_ITERATIONS = 60


def default_grid() -> GridSpec:
    return GridSpec(nx=configs.LOCUS_NX, ny=configs.LOCUS_NY)


def _segments(
    idx_h: np.ndarray,
    idx_v: np.ndarray,
    cross_h: np.ndarray,
    cross_v: np.ndarray,
    centre_positive: np.ndarray,
    corner_positive: np.ndarray,
) -> np.ndarray:
    """Отрезки по клеткам; седловые клетки разрешаются знаком в центре."""
    # рёбра клетки (j, i): низ, право, верх, лево
    edges = np.stack([idx_h[:-1, :], idx_v[:, 1:], idx_h[1:, :], idx_v[:, :-1]], axis=-1).reshape(-1, 4)
    flags = np.stack([cross_h[:-1, :], cross_v[:, 1:], cross_h[1:, :], cross_v[:, :-1]], axis=-1).reshape(-1, 4)
    count = flags.sum(axis=1)

    two = count == 2
    pairs = [edges[two][flags[two]].reshape(-1, 2)]

    four = np.nonzero(count == 4)[0]
    if four.size:
        e = edges[four]
        joined = centre_positive.reshape(-1)[four] == corner_positive.reshape(-1)[four]
        # центр связан с нижним левым углом: отсекаются правый нижний и левый верхний
        pairs.append(np.where(joined[:, None], e[:, [0, 1]], e[:, [0, 3]]))
        pairs.append(np.where(joined[:, None], e[:, [2, 3]], e[:, [1, 2]]))

    seg = np.concatenate(pairs, axis=0) if pairs else np.empty((0, 2), dtype=int)
    return seg[(seg >= 0).all(axis=1)].astype(np.int64)


class LocusService:
    """Извлечение линии |f(z, C)| = 1 на сетке."""

    def __init__(self, function_service: Optional[StabilityFunctionService] = None):
        self._f = function_service or StabilityFunctionService()

    def _polish(self, c: float, a: np.ndarray, d: np.ndarray, s: np.ndarray, tol: float) -> tuple[np.ndarray, np.ndarray]:
        """
        Ньютон по параметру s ∈ [0, 1] на рёбрах z = a + s·d.

        Шаг, выходящий за текущий отрезок локализации, заменяется бисекцией.
        Возвращает (z, | |f(z)| − 1 |).
        """
        lo = np.zeros_like(s)
        hi = np.ones_like(s)
        # знак φ в начале ребра определяет ориентацию отрезка локализации
        phi_lo_positive = np.abs(self._f.f(c, a)) - 1.0 > 0.0

        for _ in range(NEWTON_ITERATIONS):
            z = a + s * d
            f = self._f.f(c, z)
            mod = np.abs(f)
            phi = mod - 1.0
            if np.all(np.abs(phi) <= 0.1 * tol):
                break

            same_as_lo = (phi > 0.0) == phi_lo_positive
            lo = np.where(same_as_lo, s, lo)
            hi = np.where(same_as_lo, hi, s)

            with np.errstate(divide="ignore", invalid="ignore"):
                slope = np.real(np.conj(f) * self._f.fz(c, z) * d) / mod
                newton = s - phi / slope
            inside = np.isfinite(newton) & (newton > lo) & (newton < hi)
            s = np.where(inside, newton, 0.5 * (lo + hi))

        z = a + s * d
        return z, np.abs(np.abs(self._f.f(c, z)) - 1.0)

    def boundary_locus(self, c: float, grid: Optional[GridSpec] = None) -> BoundaryLocus:
        """
        Извлечь линию |f(z, C)| = 1.

        ## Обработка
        1. φ = |f| − 1 в узлах сетки
        2. Рёбра со сменой знака, линейная интерполяция
        3. Уточнение Ньютоном вдоль ребра, отбор | |f| − 1 | ≤ LOCUS_TOLERANCE
        4. Отрезки по клеткам
        """
        grid = grid or default_grid()
        if not grid.covers(*REQUIRED_BOX):
            raise ValidationError("--grid: сетка должна покрывать [-7, 2] x [-5, 5]")
        tol = configs.LOCUS_TOLERANCE

        xs, ys = grid.axes()
        z = xs[None, :] + 1j * ys[:, None]
        phi = np.abs(self._f.f(c, z)) - 1.0
        positive = phi > 0.0

        cross_h = positive[:, :-1] != positive[:, 1:]
        cross_v = positive[:-1, :] != positive[1:, :]

        jh, ih = np.nonzero(cross_h)
        jv, iv = np.nonzero(cross_v)
        a = np.concatenate([z[jh, ih], z[jv, iv]])
        b = np.concatenate([z[jh, ih + 1], z[jv + 1, iv]])
        phi_a = np.concatenate([phi[jh, ih], phi[jv, iv]])
        phi_b = np.concatenate([phi[jh, ih + 1], phi[jv + 1, iv]])

        s0 = phi_a / (phi_a - phi_b)
        points, residual = self._polish(c, a, b - a, s0, tol)
        accepted = residual <= tol

        index = np.full(accepted.size, -1, dtype=np.int64)
        index[accepted] = np.arange(int(accepted.sum()))
        idx_h = np.full(cross_h.shape, -1, dtype=np.int64)
        idx_v = np.full(cross_v.shape, -1, dtype=np.int64)
        idx_h[jh, ih] = index[: jh.size]
        idx_v[jv, iv] = index[jh.size:]

        centres = 0.5 * (z[:-1, :-1] + z[1:, 1:])
        centre_positive = np.abs(self._f.f(c, centres)) - 1.0 > 0.0
        segments = _segments(idx_h, idx_v, cross_h, cross_v, centre_positive, positive[:-1, :-1])

        points = points[accepted]
        if points.size == 0:
            raise InternalConsistencyError(f"Пустая линия |f| = 1 при C={c!r}")

        rejected = int((~accepted).sum())
        if rejected:
            logger.warning("Линия |f| = 1 (C=%r): отброшено %d точек с невязкой > %g", c, rejected, tol)
        logger.info("Линия |f| = 1 (C=%r): %d точек, %d отрезков", c, points.size, len(segments))

        return BoundaryLocus(
            c=c,
            points=points,
            segments=segments,
            grid=grid,
            tolerance=tol,
            rejected=rejected,
            meta={"nx": grid.nx, "ny": grid.ny, "edges": int(accepted.size)},
        )

"""
ReferenceService — точные значения для измерения ошибок.

## Бизнес-контекст
Если у задачи есть аналитическое решение, используется оно.
Иначе эталон — RK4 с τ = 0.001 на [t0, горизонт], вычисляется один раз
и кэшируется в ReferenceRepository.
"""

import logging
from typing import Optional, Sequence

import numpy as np

from core.exceptions import ValidationError
from model.trajectory_model import MethodSpec, Trajectory
from repository.reference_repository import ReferenceRepository, reference_key
from service.experiment.problem_factory import ProblemSetup
from service.integrator.integrate_service import IntegrateService

logger = logging.getLogger(__name__)

REFERENCE_TAU = 0.001


class ReferenceService:
    """Точные или эталонные значения задачи."""

    def __init__(
        self,
        repository: Optional[ReferenceRepository] = None,
        integrator: Optional[IntegrateService] = None,
    ):
        self._repository = repository or ReferenceRepository()
        self._integrator = integrator or IntegrateService()

    def reference_trajectory(self, setup: ProblemSetup, t_end: Optional[float] = None) -> Trajectory:
        """
        Эталонная траектория RK4 (τ = 0.001), из кэша или вычисленная.

        ## Исключения
        - StorageError: кэш недоступен для записи
        """
        t_end = setup.horizon if t_end is None else max(t_end, setup.horizon)
        method = MethodSpec.rk4()
        key = reference_key(setup.problem.name, setup.params, REFERENCE_TAU, method.tag, setup.t0, t_end)
        return self._repository.get_or_create(
            key,
            lambda: self._integrator.integrate(
                setup.problem, setup.u0, setup.t0, t_end, REFERENCE_TAU, method, keep_records=False
            ),
        )

    def exact_values(self, setup: ProblemSetup, times: Sequence[float]) -> np.ndarray:
        """
        Точные (или эталонные) значения в моменты times.

        ## Выходные данные
        - массив (len(times), dim)

        ## Исключения
        - ValidationError: момент не совпадает с узлом эталонной сетки
        """
        exact = setup.problem.exact
        if exact is not None:
            return np.vstack([np.atleast_1d(np.asarray(exact(t), dtype=float)) for t in times])

        ref = self.reference_trajectory(setup, max(times))
        grid = ref.times
        rows = []
        for t in times:
            idx = int(np.clip(np.searchsorted(grid, t), 1, grid.size - 1))
            idx = idx if abs(grid[idx] - t) < abs(grid[idx - 1] - t) else idx - 1
            if abs(grid[idx] - t) > 1e-9 * max(1.0, abs(t)):
                raise ValidationError(f"Момент t={t!r} не лежит на сетке эталона τ={REFERENCE_TAU}")
            rows.append(ref.states[idx].components())
        return np.vstack(rows)

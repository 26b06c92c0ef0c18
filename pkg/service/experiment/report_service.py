"""
ReportService — сборка строк отчёта об ошибках из траектории.

## Бизнес-контекст
Отсчёт в момент t берётся из последнего состояния с временем ≤ t
(для τ, не кратных t, это ближайший узел слева). Если траектория
разошлась раньше, строка остаётся в отчёте с ошибками null.
"""

from typing import Callable, Optional, Sequence

import numpy as np

from model.trajectory_model import Trajectory
from schema.report.report_schema import ErrorRowSchema
from service.experiment.error_metrics import relative_deviation, relative_errors
from service.experiment.problem_factory import ProblemSetup
from service.experiment.reference_service import ReferenceService

ReferenceLookup = Callable[[float], Optional[Sequence[float]]]

VARIABLES = {1: ["u"], 2: ["p", "q"], 3: ["x", "y", "z"]}


def variable_names(dim: int) -> list[str]:
    return VARIABLES.get(dim, [f"u{i}" for i in range(dim)])


def sample_indices(traj: Trajectory, times: Sequence[float]) -> list[Optional[int]]:
    """Индекс последнего состояния с временем ≤ t или None, если траектория оборвалась раньше."""
    grid = traj.times
    result: list[Optional[int]] = []
    for t in times:
        slack = 1e-9 * max(1.0, abs(t))
        idx = int(np.searchsorted(grid, t + slack, side="right")) - 1
        if idx < 0 or (traj.blew_up and grid[-1] < t - slack):
            result.append(None)
        else:
            result.append(idx)
    return result


class ReportService:
    """Строки отчёта и ряды ошибок по траектории."""

    def __init__(self, references: Optional[ReferenceService] = None):
        self._references = references or ReferenceService()

    def error_rows(
        self,
        setup: ProblemSetup,
        traj: Trajectory,
        times: Sequence[float],
        reference: Optional[ReferenceLookup] = None,
    ) -> list[ErrorRowSchema]:
        """
        Строки отчёта в моменты times.

        ## Обработка
        1. Для каждого момента выбрать узел траектории
        2. Точное (эталонное) значение берётся в момент узла
        3. Опубликованные значения и отклонение добавляются, если reference их знает
        """
        dim = setup.problem.dim
        indices = sample_indices(traj, times)
        alive = [i for i in indices if i is not None]
        exact = self._references.exact_values(setup, [traj.states[i].t for i in alive]) if alive else None

        rows = []
        k = 0
        for t, idx in zip(times, indices):
            if idx is None:
                rows.append(ErrorRowSchema(t=t, tau=traj.step_size, errors=[None] * dim, divergent=True))
                continue
            state = traj.states[idx]
            errors = relative_errors(exact[k], state.components())
            k += 1
            published = reference(state.t) if reference is not None else None
            row = ErrorRowSchema(
                t=state.t,
                tau=traj.step_size,
                steps=idx,
                errors=errors,
                divergent=any(e is None for e in errors),
            )
            if published is not None:
                row.reference = list(published)
                row.deviation = [relative_deviation(e, r) for e, r in zip(errors, published)]
            rows.append(row)
        return rows

    def series_errors(self, setup: ProblemSetup, traj: Trajectory) -> tuple[np.ndarray, list[Optional[float]]]:
        """Максимальная по компонентам относительная ошибка во всех узлах траектории."""
        times = traj.times
        exact = self._references.exact_values(setup, list(times))
        series: list[Optional[float]] = []
        for row, state in zip(exact, traj.states):
            errors = relative_errors(row, state.components())
            series.append(None if any(e is None for e in errors) else max(errors))
        return times, series

"""
IntegrateService — драйвер траектории с фиксированным шагом.

## Бизнес-контекст
Повторяет шаги выбранного метода от t0 до t_end.
По умолчанию времена узлов t0 + kτ (без накопления суммы), последний шаг
укорачивается, чтобы попасть ровно в t_end. В режиме accumulate_time
время ведётся суммой t ← t + τ, как в табличных прогонах, и в конце
не подравнивается. Разнос не является аварией: траектория помечается
blew_up и обрывается.

## Исключения
- ValidationError: τ ≤ 0 или t_end < t0
- WeightDegeneracyError: с номером шага
- UnsupportedModeError: BetaShift для систем
"""

import logging
import math
from typing import Optional

import numpy as np

from core.exceptions import NumericalBlowUpError, UnsupportedModeError, ValidationError, WeightDegeneracyError
from model.enums import MethodKindEnum, WeightModeEnum
from model.problem_model import Problem, State, SystemProblem
from model.trajectory_model import MethodSpec, Trajectory
from service.integrator.rk4_service import RK4Service
from service.integrator.two_stage_service import TwoStageService, make_record

logger = logging.getLogger(__name__)

COMMENSURATE_TOLERANCE = 1e-9


def step_count(t0: float, t_end: float, tau: float) -> tuple[int, bool]:
    """
    Число шагов до t_end и признак кратности.

    (t_end − t0)/τ, целое с точностью 1e-9, считается кратным.
    """
    ratio = (t_end - t0) / tau
    n = round(ratio)
    commensurate = abs(ratio - n) < COMMENSURATE_TOLERANCE
    if not commensurate:
        n = math.floor(ratio) + 1
    return max(n, 1), commensurate


class IntegrateService:
    """Интегрирование задачи методом из MethodSpec."""

    def __init__(
        self,
        two_stage: Optional[TwoStageService] = None,
        rk4: Optional[RK4Service] = None,
    ):
        self._two_stage = two_stage or TwoStageService()
        self._rk4 = rk4 or RK4Service()

    @staticmethod
    def time_grid(t0: float, t_end: float, tau: float) -> np.ndarray:
        """Узлы t0 + kτ; последний узел равен t_end."""
        n, _ = step_count(t0, t_end, tau)
        grid = t0 + tau * np.arange(n + 1, dtype=float)
        grid[-1] = t_end
        return grid

    def _stepper(self, p: Problem, method: MethodSpec):
        """Функция (t, u, τ) → (uⁿ⁺¹, α, β) для выбранного метода."""
        if method.kind == MethodKindEnum.RK4:
            return lambda t, u, tau: (self._rk4.update(p, t, u, tau), None, None)

        w = method.weights
        if isinstance(p, SystemProblem):
            if w.mode != WeightModeEnum.ALPHA_SHIFT:
                raise UnsupportedModeError(w.mode.value, "system")
            return lambda t, u, tau: self._two_stage.system_update(p, t, u, tau, w.c)
        return lambda t, u, tau: self._two_stage.scalar_update(p, t, u, tau, w)

    def _schedule(self, t0: float, t_end: float, tau: float, accumulate_time: bool):
        """Тройки (tⁿ, tⁿ⁺¹, τⁿ) шагов по порядку."""
        if not accumulate_time:
            grid = self.time_grid(t0, t_end, tau)
            for k in range(len(grid) - 1):
                t_from, t_to = float(grid[k]), float(grid[k + 1])
                yield t_from, t_to, t_to - t_from
            return

        n, commensurate = step_count(t0, t_end, tau)
        t = float(t0)
        for k in range(n):
            h = tau
            if k == n - 1 and not commensurate:
                h = t_end - t
            yield t, t + h, h
            t = t + h

    def integrate(
        self,
        p: Problem,
        u0,
        t0: float,
        t_end: float,
        tau: float,
        method: MethodSpec,
        keep_records: bool = True,
        accumulate_time: bool = False,
    ) -> Trajectory:
        """
        Проинтегрировать задачу на [t0, t_end] с шагом τ.

        ## Входные данные
        - p: скалярная задача или система
        - u0: начальное состояние
        - t0, t_end: отрезок интегрирования (t_end ≥ t0)
        - tau: шаг τ > 0
        - method: MethodSpec (двухстадийная схема с весами или RK4)
        - keep_records: сохранять StepRecord каждого шага
        - accumulate_time: вести время суммой t ← t + τ

        ## Обработка
        1. Расписание шагов с укороченным последним шагом
        2. Последовательные шаги; разнос → blew_up, остановка
        3. WeightDegeneracyError пробрасывается с номером шага

        ## Выходные данные
        - Trajectory
        """
        if not (np.isfinite(tau) and tau > 0.0):
            raise ValidationError(f"--tau: шаг должен быть положительным (tau must be positive), получено {tau!r}")
        if not (np.isfinite(t0) and np.isfinite(t_end) and t_end >= t0):
            raise ValidationError(f"--T: конец отрезка {t_end!r} меньше начала {t0!r}")

        if isinstance(p, SystemProblem):
            u = p.check_vector(u0, "u0").copy()
        else:
            u = float(u0)

        step = self._stepper(p, method)
        states = [State(float(t0), u)]
        trajectory = Trajectory(states=states, step_size=tau, method_tag=method.tag)
        if t_end == t0:
            return trajectory

        for k, (t_from, t_to, h) in enumerate(self._schedule(t0, t_end, tau, accumulate_time)):
            try:
                u_next, alpha, beta = step(t_from, u, h)
            except NumericalBlowUpError as exc:
                trajectory.blew_up = True
                trajectory.blow_up_step = k
                logger.warning(
                    "Разнос решения: метод=%s, tau=%s, шаг %d, t=%s",
                    method.tag,
                    tau,
                    k,
                    exc.t,
                )
                break
            except WeightDegeneracyError as exc:
                raise exc.at_step(k) from exc

            if keep_records and method.kind == MethodKindEnum.TWO_STAGE:
                trajectory.records.append(make_record(t_from, t_to, u, u_next, alpha, beta))
            u = u_next
            states.append(State(t_to, u))

        logger.debug(
            "Интегрирование завершено: метод=%s, tau=%s, шагов=%d, blew_up=%s",
            method.tag,
            tau,
            len(states) - 1,
            trajectory.blew_up,
        )
        return trajectory

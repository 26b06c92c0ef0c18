"""
TwoStageService — двухстадийная явная схема четвёртого порядка с переменными весами.

## Бизнес-контекст
Один шаг использует L и D_t L ровно в двух точках:
    u* = uⁿ + τ/(3β)·L + τ²/(12β)·D_t L,   t* = tⁿ + τ/(3β)
    uⁿ⁺¹ = uⁿ + τL + τ²/2·[α·D_t L(tⁿ, uⁿ) + β·D_t L(t*, u*)]
Веса (α, β) зависят от τ·L_u(tⁿ, uⁿ) через WeightPolicy.
Для систем α — матрица (1/3)I + (Cτ³/60)J³, β = 2/3.

## Исключения
- WeightDegeneracyError: |β| ниже порога BETA_GUARD
- NumericalBlowUpError: неконечное или слишком большое промежуточное значение
- UnsupportedModeError: BetaShift для систем
"""

from typing import Optional

import numpy as np

from core.config import configs
from core.exceptions import NumericalBlowUpError, UnsupportedModeError, ValidationError, WeightDegeneracyError
from model.enums import WeightModeEnum
from model.problem_model import ScalarProblem, State, SystemProblem
from model.trajectory_model import StepRecord
from model.weight_model import BETA_BASE, WeightPolicy
from service.ode.derivative_service import DerivativeService


def check_tau(tau: float) -> None:
    if not (np.isfinite(tau) and tau >= 0.0):
        raise ValidationError(f"--tau: шаг отрицателен или не конечен (tau must be positive), получено {tau!r}")


def guard_finite(t: float, *values) -> None:
    """Сигнал разноса: NaN или Inf среди промежуточных значений."""
    for v in values:
        if not np.all(np.isfinite(v)):
            raise NumericalBlowUpError(t)


def guard_state(t: float, u) -> None:
    """Сигнал разноса для нового состояния: неконечно или |компонента| > OVERFLOW_GUARD."""
    arr = np.abs(np.asarray(u, dtype=float))
    if not np.all(np.isfinite(arr)) or np.any(arr > configs.OVERFLOW_GUARD):
        raise NumericalBlowUpError(t)


def make_record(t_from, t_to, u_from, u_to, alpha, beta) -> StepRecord:
    return StepRecord(
        t_from=t_from,
        t_to=t_to,
        u_from=u_from,
        u_to=u_to,
        alpha_used=alpha,
        beta_used=beta,
    )


class TwoStageService:
    """Шаг двухстадийной схемы для скалярных задач и систем."""

    def __init__(self, derivatives: Optional[DerivativeService] = None):
        self._derivatives = derivatives or DerivativeService()

    def scalar_update(
        self,
        p: ScalarProblem,
        t: float,
        u: float,
        tau: float,
        w: WeightPolicy,
    ) -> tuple[float, float, float]:
        """
        Шаг двухстадийной схемы для скалярной задачи.

        ## Выходные данные
        - (uⁿ⁺¹, α, β)
        """
        with np.errstate(all="ignore"):
            l0, lu0, d0 = self._derivatives.scalar_parts(p, t, u)
            guard_finite(t, l0, lu0, d0)

            alpha, beta = w.weights(tau * lu0)
            if not abs(beta) >= configs.BETA_GUARD:
                raise WeightDegeneracyError(t, u, tau, w.c, beta)

            h = tau / (3.0 * beta)
            u_star = u + h * l0 + (tau * tau / (12.0 * beta)) * d0
            t_star = t + h
            guard_finite(t_star, u_star)

            _, _, d_star = self._derivatives.scalar_parts(p, t_star, u_star)
            u_next = u + tau * l0 + (tau * tau / 2.0) * (alpha * d0 + beta * d_star)
        guard_finite(t + tau, d_star)
        guard_state(t + tau, u_next)
        return u_next, alpha, beta

    def system_update(
        self,
        p: SystemProblem,
        t: float,
        u: np.ndarray,
        tau: float,
        c: float,
    ) -> tuple[np.ndarray, np.ndarray, float]:
        """
        Шаг схемы для системы с матричным весом α.

        ## Выходные данные
        - (uⁿ⁺¹, α (m×m), β)
        """
        beta = BETA_BASE
        with np.errstate(all="ignore"):
            l0, jac, d0 = self._derivatives.system_parts(p, t, u)
            guard_finite(t, l0, jac, d0)

            m = tau * jac
            alpha = np.eye(p.dim) / 3.0 + (c / 60.0) * (m @ m @ m)

            h = tau / (3.0 * beta)
            u_star = u + h * l0 + (tau * tau / (12.0 * beta)) * d0
            t_star = t + h
            guard_finite(t_star, u_star)

            _, _, d_star = self._derivatives.system_parts(p, t_star, u_star)
            u_next = u + tau * l0 + (tau * tau / 2.0) * (alpha @ d0 + beta * d_star)
        guard_finite(t + tau, d_star)
        guard_state(t + tau, u_next)
        return u_next, alpha, beta

    def step_scalar(
        self,
        p: ScalarProblem,
        s: State,
        tau: float,
        w: WeightPolicy,
    ) -> State:
        """
        Один шаг для скалярной задачи.

        ## Входные данные
        - p: задача с L, L_t, L_u
        - s: текущее состояние (tⁿ, uⁿ)
        - tau: шаг τ ≥ 0 (τ = 0 даёт тождество)
        - w: политика весов (C, режим)

        ## Выходные данные
        - State(tⁿ + τ, uⁿ⁺¹)

        ## Исключения
        - WeightDegeneracyError, NumericalBlowUpError
        """
        check_tau(tau)
        u_next, _, _ = self.scalar_update(p, s.t, s.u, tau, w)
        return State(s.t + tau, u_next)

    def step_system(
        self,
        p: SystemProblem,
        s: State,
        tau: float,
        c: float,
        mode: WeightModeEnum = WeightModeEnum.ALPHA_SHIFT,
    ) -> State:
        """
        Один шаг для системы: β = 2/3, α = (1/3)I + (Cτ³/60)J³.

        ## Исключения
        - UnsupportedModeError: mode = BetaShift
        - ContractViolationError: размер u не равен dim
        - NumericalBlowUpError
        """
        if WeightModeEnum(mode) != WeightModeEnum.ALPHA_SHIFT:
            raise UnsupportedModeError(WeightModeEnum(mode).value, "system")
        check_tau(tau)
        u = p.check_vector(s.u, "u")
        u_next, _, _ = self.system_update(p, s.t, u, tau, c)
        return State(s.t + tau, u_next)

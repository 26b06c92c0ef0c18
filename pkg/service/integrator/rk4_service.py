"""
RK4Service — классический четырёхстадийный метод Рунге–Кутты (эталонный).

## Обработка
    u⁽¹⁾ = uⁿ + τ/2·L(tⁿ, uⁿ)
    u⁽²⁾ = uⁿ + τ/2·L(tⁿ + τ/2, u⁽¹⁾)
    u⁽³⁾ = uⁿ + τ·L(tⁿ + τ/2, u⁽²⁾)
    uⁿ⁺¹ = (u⁽¹⁾ + 2u⁽²⁾ + u⁽³⁾ − uⁿ + τ/2·L(tⁿ + τ, u⁽³⁾)) / 3
Ровно четыре вычисления L на шаг.
"""

import numpy as np

from model.problem_model import Problem, State, SystemProblem
from service.integrator.two_stage_service import check_tau, guard_finite, guard_state


class RK4Service:
    """Шаг RK4 для скалярных задач и систем."""

    def update(self, p: Problem, t: float, u, tau: float):
        """uⁿ⁺¹ по формуле RK4 (без проверки шага)."""
        system = isinstance(p, SystemProblem)

        def rhs(tt, uu):
            v = p.rhs(tt, uu)
            return p.check_vector(v, "rhs") if system else v

        half = 0.5 * tau
        with np.errstate(all="ignore"):
            u1 = u + half * rhs(t, u)
            guard_finite(t, u1)
            u2 = u + half * rhs(t + half, u1)
            guard_finite(t + half, u2)
            u3 = u + tau * rhs(t + half, u2)
            guard_finite(t + half, u3)
            u_next = (u1 + 2.0 * u2 + u3 - u + half * rhs(t + tau, u3)) / 3.0
        guard_state(t + tau, u_next)
        return u_next

    def step(self, p: Problem, s: State, tau: float) -> State:
        """
        Один шаг RK4 для скалярной задачи или системы.

        ## Исключения
        - NumericalBlowUpError: неконечное значение
        - ContractViolationError: неверная размерность (системы)
        """
        check_tau(tau)
        u = p.check_vector(s.u, "u") if isinstance(p, SystemProblem) else s.u
        return State(s.t + tau, self.update(p, s.t, u, tau))

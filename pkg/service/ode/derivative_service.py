"""
DerivativeService — полная производная по времени D_t L.

## Бизнес-контекст
Двухпроизводная схема на каждой стадии использует L и
D_t L = ∂_t L + L·∂_u L (для систем: L_t + (∇_u L)·L).
Производные задаются автором задачи аналитически.

## Исключения
- EvaluationError: результат не конечен
- ContractViolationError: размерности не совпадают с dim
"""

import numpy as np

from core.exceptions import EvaluationError
from model.problem_model import Problem, ScalarProblem, SystemProblem


class DerivativeService:
    """Сервис вычисления L, якобиана и D_t L."""

    @staticmethod
    def scalar_parts(p: ScalarProblem, t: float, u: float) -> tuple[float, float, float]:
        """
        (L, L_u, D_t L) в точке (t, u), каждая функция вызывается ровно один раз.

        Без проверки конечности: интегратор проверяет результат шага сам.
        """
        l = p.rhs(t, u)
        lt = p.rhs_t(t, u)
        lu = p.rhs_u(t, u)
        return l, lu, lt + l * lu

    @staticmethod
    def system_parts(
        p: SystemProblem, t: float, u: np.ndarray
    ) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(L, J, D_t L) для системы, с проверкой форм."""
        l = p.check_vector(p.rhs(t, u), "rhs")
        lt = p.check_vector(p.rhs_t(t, u), "rhs_t")
        jac = p.check_matrix(p.jacobian(t, u), "jacobian")
        return l, jac, lt + jac @ l

    def dt_l_scalar(self, p: ScalarProblem, t: float, u: float) -> float:
        """
        D_t L для скалярной задачи.

        ## Выходные данные
        - rhs_t(t,u) + rhs(t,u)·rhs_u(t,u)

        ## Исключения
        - EvaluationError: результат не конечен
        """
        with np.errstate(over="ignore", invalid="ignore"):
            _, _, d = self.scalar_parts(p, t, u)
        if not np.isfinite(d):
            raise EvaluationError(t, u)
        return d

    def dt_l_system(self, p: SystemProblem, t: float, u: np.ndarray) -> np.ndarray:
        """
        D_t L для системы: rhs_t(t,u) + jacobian(t,u)·rhs(t,u).

        ## Исключения
        - ContractViolationError: u или результаты функций неверной формы
        - EvaluationError: результат не конечен
        """
        u = p.check_vector(u, "u")
        with np.errstate(over="ignore", invalid="ignore"):
            _, _, d = self.system_parts(p, t, u)
        if not np.all(np.isfinite(d)):
            raise EvaluationError(t, u)
        return d

    def dt_l(self, p: Problem, t: float, u):
        """D_t L для задачи любой формы."""
        if isinstance(p, SystemProblem):
            return self.dt_l_system(p, t, u)
        return self.dt_l_scalar(p, t, u)

"""
EvaluationCounter — подсчёт вызовов функций задачи.

## Бизнес-контекст
Экономичность схемы: ровно два вычисления D_t L на двухстадийный шаг
против четырёх вычислений L на шаг RK4. Счётчик оборачивает задачу
и считает вызовы rhs, rhs_t и rhs_u (jacobian для систем).
"""

from collections import Counter
from dataclasses import replace
from typing import Callable

from model.problem_model import Problem, SystemProblem


class EvaluationCounter:
    """Обёртка задачи со счётчиками вызовов."""

    def __init__(self, problem: Problem):
        self.counts: Counter = Counter()
        derivative = "jacobian" if isinstance(problem, SystemProblem) else "rhs_u"
        self.problem = replace(
            problem,
            rhs=self._wrap("rhs", problem.rhs),
            rhs_t=self._wrap("rhs_t", problem.rhs_t),
            **{derivative: self._wrap("rhs_u", getattr(problem, derivative))},
        )

    def _wrap(self, key: str, fn: Callable) -> Callable:
        def counted(t, u):
            self.counts[key] += 1
            return fn(t, u)

        return counted

    @property
    def rhs(self) -> int:
        return self.counts["rhs"]

    @property
    def rhs_t(self) -> int:
        return self.counts["rhs_t"]

    @property
    def rhs_u(self) -> int:
        return self.counts["rhs_u"]

    @property
    def dt_l(self) -> int:
        """Число полных вычислений D_t L (нужны rhs_t и rhs_u)."""
        return min(self.counts["rhs_t"], self.counts["rhs_u"])

    def reset(self) -> None:
        self.counts.clear()

    def snapshot(self) -> dict[str, int]:
        return {"rhs": self.rhs, "rhs_t": self.rhs_t, "rhs_u": self.rhs_u, "dt_l": self.dt_l}

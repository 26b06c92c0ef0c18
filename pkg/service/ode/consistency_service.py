"""
ConsistencyService — диагностика определений задач.

## Бизнес-контекст
Проверочные утилиты для тестов и отладки реестра задач.
В шагах интегратора не используются: схема потребляет точную D_t L.
"""

import numpy as np

from core.exceptions import ValidationError
from model.problem_model import Problem, SystemProblem

RELATIVE_STEP = 1e-6


class ConsistencyService:
    """Сверка аналитических производных и точных решений с конечными разностями."""

    def finite_difference_dt_l(self, p: Problem, t: float, u):
        """
        Центральная разность L вдоль потока.

        ## Обработка
        (L(t+h, u+hL) − L(t−h, u−hL)) / 2h, h = 1e-6·(1+|u|)

        ## Выходные данные
        - приближение D_t L той же формы, что и L
        """
        system = isinstance(p, SystemProblem)
        if system:
            u = p.check_vector(u, "u")
            l = np.asarray(p.rhs(t, u), dtype=float)
        else:
            l = p.rhs(t, u)
        h = RELATIVE_STEP * (1.0 + float(np.max(np.abs(u))))
        forward = p.rhs(t + h, u + h * l)
        backward = p.rhs(t - h, u - h * l)
        if system:
            return (np.asarray(forward, dtype=float) - np.asarray(backward, dtype=float)) / (2.0 * h)
        return (forward - backward) / (2.0 * h)

    def check_exact_consistency(
        self,
        p: Problem,
        t0: float,
        t1: float,
        samples: int = 100,
    ) -> float:
        """
        Максимальная нормированная невязка точного решения.

        ## Входные данные
        - p: задача с exact
        - t0, t1: отрезок выборки
        - samples: число точек

        ## Обработка
        u_exact' берётся центральной разностью с h = 1e-6·(1+|t|),
        невязка |u_exact'(t) − L(t, u_exact(t))| / (1 + |u_exact'(t)|)

        ## Выходные данные
        - максимум невязки по точкам (максимум по компонентам для систем)

        ## Исключения
        - ValidationError: у задачи нет точного решения
        """
        if p.exact is None:
            raise ValidationError(f"У задачи '{p.name}' нет точного решения")

        worst = 0.0
        for t in np.linspace(t0, t1, samples):
            t = float(t)
            h = RELATIVE_STEP * (1.0 + abs(t))
            du = (np.asarray(p.exact(t + h)) - np.asarray(p.exact(t - h))) / (2.0 * h)
            residual = np.abs(du - np.asarray(p.rhs(t, p.exact(t)))) / (1.0 + np.abs(du))
            worst = max(worst, float(np.max(residual)))
        return worst

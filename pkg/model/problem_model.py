"""
ProblemModel — задачи Коши и состояние интегратора.

## Бизнес-контекст
Задача задаётся правой частью L(t, u) вместе с аналитическими
производными ∂L/∂t и ∂L/∂u (или якобианом для систем): двухпроизводная
схема потребляет полную производную D_t L = L_t + L·L_u.

## Выходные данные
- ScalarProblem, SystemProblem: неизменяемые описания задач
- State: точка (t, u) траектории с проверкой конечности
"""

from dataclasses import dataclass, field
from typing import Callable, Optional, Union

import numpy as np

from core.exceptions import ContractViolationError, InvalidStateError
from model.enums import ProblemFormEnum

ScalarFn = Callable[[float, float], float]
VectorFn = Callable[[float, np.ndarray], np.ndarray]

StateValue = Union[float, np.ndarray]


@dataclass(frozen=True, eq=False)
class ScalarProblem:
    """
    Скалярная задача u' = L(t, u).

    ## Поля
    - rhs, rhs_t, rhs_u: L, ∂L/∂t, ∂L/∂u
    - exact: аналитическое решение (опционально)
    - name, params: идентификация задачи (ключ кэша эталонов)
    """

    rhs: ScalarFn
    rhs_t: ScalarFn
    rhs_u: ScalarFn
    exact: Optional[Callable[[float], float]] = None
    name: str = "scalar"
    params: dict = field(default_factory=dict)

    @property
    def form(self) -> ProblemFormEnum:
        return ProblemFormEnum.SCALAR

    @property
    def dim(self) -> int:
        return 1


@dataclass(frozen=True, eq=False)
class SystemProblem:
    """
    Система u' = L(t, u), u ∈ R^m, с якобианом ∇_u L.
    """

    dim: int
    rhs: VectorFn
    rhs_t: VectorFn
    jacobian: Callable[[float, np.ndarray], np.ndarray]
    exact: Optional[Callable[[float], np.ndarray]] = None
    name: str = "system"
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if int(self.dim) != self.dim or self.dim < 1:
            raise ContractViolationError(
                f"Размерность системы должна быть положительным целым, получено {self.dim!r}"
            )

    @property
    def form(self) -> ProblemFormEnum:
        return ProblemFormEnum.SYSTEM

    def check_vector(self, v: np.ndarray, what: str) -> np.ndarray:
        """Проверить, что v — вектор длины dim."""
        arr = np.asarray(v, dtype=float)
        if arr.shape != (self.dim,):
            raise ContractViolationError(
                f"{what}: ожидалась форма ({self.dim},), получено {arr.shape}"
            )
        return arr

    def check_matrix(self, m: np.ndarray, what: str) -> np.ndarray:
        """Проверить, что m — матрица dim×dim."""
        arr = np.asarray(m, dtype=float)
        if arr.shape != (self.dim, self.dim):
            raise ContractViolationError(
                f"{what}: ожидалась форма ({self.dim}, {self.dim}), получено {arr.shape}"
            )
        return arr


Problem = Union[ScalarProblem, SystemProblem]


@dataclass(frozen=True, eq=False)
class State:
    """Точка траектории. NaN/Inf отклоняются при создании."""

    t: float
    u: StateValue

    def __post_init__(self):
        if isinstance(self.u, np.ndarray):
            u = np.array(self.u, dtype=float)
            u.setflags(write=False)
            object.__setattr__(self, "u", u)
            finite = bool(np.all(np.isfinite(u)))
        else:
            object.__setattr__(self, "u", float(self.u))
            finite = np.isfinite(self.u)
        if not (np.isfinite(self.t) and finite):
            raise InvalidStateError(self.t, self.u)

    def components(self) -> np.ndarray:
        """Компоненты состояния как одномерный массив."""
        return np.atleast_1d(np.asarray(self.u, dtype=float))

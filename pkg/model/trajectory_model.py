"""
TrajectoryModel — метод, записи шагов и траектория.
"""

from dataclasses import dataclass, field
from typing import Any, Optional

import numpy as np

from model.enums import MethodKindEnum
from model.problem_model import State
from model.weight_model import WeightPolicy


@dataclass(frozen=True)
class MethodSpec:
    """Метод интегрирования: двухстадийная схема с весами или RK4."""

    kind: MethodKindEnum = MethodKindEnum.TWO_STAGE
    weights: WeightPolicy = field(default_factory=WeightPolicy)

    @classmethod
    def two_stage(cls, weights: WeightPolicy) -> "MethodSpec":
        return cls(kind=MethodKindEnum.TWO_STAGE, weights=weights)

    @classmethod
    def rk4(cls) -> "MethodSpec":
        return cls(kind=MethodKindEnum.RK4)

    @property
    def tag(self) -> str:
        """Идентификатор метода для отчётов: 'rk4' или 'two-stage[C=..,alpha-shift]'."""
        if self.kind == MethodKindEnum.RK4:
            return MethodKindEnum.RK4.value
        return f"{self.kind.value}[C={self.weights.c!r},{self.weights.mode.value}]"


@dataclass(frozen=True, eq=False)
class StepRecord:
    """
    Запись одного шага.

    alpha_used — скаляр для скалярных задач и матрица m×m для систем.
    """

    t_from: float
    t_to: float
    u_from: Any
    u_to: Any
    alpha_used: Any
    beta_used: float


@dataclass(eq=False)
class Trajectory:
    """
    Траектория фиксированного шага.

    ## Поля
    - states: состояния, времена строго возрастают
    - step_size: τ (последний шаг может быть укорочен до t_end)
    - method_tag: идентификатор метода
    - blew_up: решение превысило порог переполнения
    - blow_up_step: номер шага, на котором обнаружен разнос
    - records: записи шагов (веса на каждом шаге)
    """

    states: list[State]
    step_size: float
    method_tag: str
    blew_up: bool = False
    blow_up_step: Optional[int] = None
    records: list[StepRecord] = field(default_factory=list)

    @property
    def times(self) -> np.ndarray:
        return np.array([s.t for s in self.states], dtype=float)

    @property
    def values(self) -> np.ndarray:
        """Матрица (n_states, dim) компонент состояний."""
        return np.vstack([s.components() for s in self.states])

    @property
    def final(self) -> State:
        return self.states[-1]

    def state_at(self, t: float, atol: float = 1e-9) -> Optional[State]:
        """Состояние с временем t (с допуском atol) или None."""
        times = self.times
        idx = int(np.argmin(np.abs(times - t)))
        if abs(times[idx] - t) <= atol * max(1.0, abs(t)):
            return self.states[idx]
        return None

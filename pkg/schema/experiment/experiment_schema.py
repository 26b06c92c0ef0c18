"""
ExperimentSchema — описание численного эксперимента.

## Бизнес-контекст
Параметры задач зафиксированы значениями реестра и меняются только
явно через overrides. Спецификация описывает метод (C, режим или RK4),
расписание шагов, горизонт и моменты отсчёта ошибок.
"""

import math
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from model.enums import MethodKindEnum, ProblemIdEnum, WeightModeEnum
from model.trajectory_model import MethodSpec
from model.weight_model import WeightPolicy


class ExperimentSpecSchema(BaseModel):
    """
    Спецификация эксперимента.

    ## Входные данные
    - problem_id: задача реестра
    - method: two-stage или rk4
    - c: константа C (для two-stage)
    - mode: режим весов
    - tau0: опорный шаг для таблицы сходимости (τ0/2^k)
    - levels: число уровней k = 0..levels−1
    - taus: явный список шагов (свипы, таблицы по t)
    - horizon: T (по умолчанию из реестра)
    - sample_times: моменты отсчёта ошибок
    - overrides: замена параметров задачи
    """

    model_config = ConfigDict(populate_by_name=True)

    problem_id: ProblemIdEnum
    method: MethodKindEnum = MethodKindEnum.TWO_STAGE
    c: float = Field(0.0, alias="C")
    mode: WeightModeEnum = WeightModeEnum.ALPHA_SHIFT
    tau0: Optional[float] = None
    levels: int = Field(6, ge=1)
    taus: list[float] = Field(default_factory=list)
    horizon: Optional[float] = None
    sample_times: Optional[list[float]] = None
    overrides: dict[str, float] = Field(default_factory=dict)

    @model_validator(mode="after")
    def validate_steps(self) -> "ExperimentSpecSchema":
        """Проверяет положительность шагов и конечность C."""
        if not math.isfinite(self.c):
            raise ValueError("--C: C должна быть конечной (C must be finite)")
        steps = list(self.taus) + ([self.tau0] if self.tau0 is not None else [])
        for tau in steps:
            if not (math.isfinite(tau) and tau > 0.0):
                raise ValueError("--tau: шаг должен быть положительным (tau must be positive)")
        if self.horizon is not None and not self.horizon > 0.0:
            raise ValueError("--T: горизонт должен быть положительным (horizon must be positive)")
        return self

    @property
    def method_spec(self) -> MethodSpec:
        if self.method == MethodKindEnum.RK4:
            return MethodSpec.rk4()
        return MethodSpec.two_stage(WeightPolicy(c=self.c, mode=self.mode))

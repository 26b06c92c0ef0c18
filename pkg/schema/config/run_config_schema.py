"""
RunConfigSchema — конфигурация одного запуска CLI.

## Бизнес-контекст
Флаги argparse собираются в словарь и валидируются здесь.
Сообщения об ошибках называют флаг, чтобы пользователь видел, что исправить.

## Правила
- Ровно одна подкоманда
- τ > 0, C конечно, T > 0, jobs ≥ 1
"""

import math
from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from model.enums import LocusRegionEnum, MethodKindEnum, OutputFormatEnum, WeightModeEnum
from model.stability_model import GridSpec


# --table: (задача, метод, C или None — C берётся из --C)
TABLE_PRESETS: dict[int, tuple[str, MethodKindEnum, Optional[float]]] = {
    1: ("exp-decay", MethodKindEnum.TWO_STAGE, None),
    2: ("spring", MethodKindEnum.TWO_STAGE, None),
    3: ("lorenz", MethodKindEnum.TWO_STAGE, 0.0),
    4: ("lorenz", MethodKindEnum.TWO_STAGE, 0.5),
    5: ("lorenz", MethodKindEnum.TWO_STAGE, 1.0),
    6: ("lorenz", MethodKindEnum.RK4, None),
}

# --example: номер примера → задача реестра
EXAMPLE_PROBLEMS: dict[str, str] = {
    "4.1": "exp-decay",
    "4.2": "stiff-linear",
    "4.3": "stiff-nonlinear",
    "4.4": "spring",
    "4.5": "lorenz",
}


class GridConfigSchema(BaseModel):
    """Сетка для stability locus."""

    re_min: float = -7.0
    re_max: float = 2.0
    im_min: float = -5.0
    im_max: float = 5.0
    nx: Optional[int] = Field(None, ge=2)
    ny: Optional[int] = Field(None, ge=2)

    def to_grid(self, nx: int, ny: int) -> GridSpec:
        return GridSpec(
            re_min=self.re_min,
            re_max=self.re_max,
            im_min=self.im_min,
            im_max=self.im_max,
            nx=self.nx or nx,
            ny=self.ny or ny,
        )


class RunConfigSchema(BaseModel):
    """
    Параметры запуска.

    ## Поля
    - command: integrate | stability | converge | bench
    - action: действие stability (interval, imag, locus, constants)
    - problem / experiment: задача реестра
    - table, example: выбор задачи по номеру опубликованной таблицы или примера
    - region: часть линии |f| = 1 (full или stable, Re z ≤ 0)
    - method, c, mode: метод интегрирования
    - tau, taus, tau0, levels: шаг или расписание шагов
    - horizon, t0: отрезок интегрирования
    - output, format: файл результата и формат
    - grid: сетка линии |f| = 1
    - jobs: размер пула процессов bench
    """

    model_config = ConfigDict(populate_by_name=True)

    command: Literal["integrate", "stability", "converge", "bench"]
    action: Optional[Literal["interval", "imag", "locus", "constants"]] = None
    problem: Optional[str] = None
    table: Optional[int] = None
    example: Optional[str] = None
    region: LocusRegionEnum = LocusRegionEnum.FULL
    method: MethodKindEnum = MethodKindEnum.TWO_STAGE
    c: float = Field(0.0, alias="C")
    c_values: list[float] = Field(default_factory=list)
    mode: WeightModeEnum = WeightModeEnum.ALPHA_SHIFT
    tau: Optional[float] = None
    taus: list[float] = Field(default_factory=list)
    tau0: Optional[float] = None
    levels: int = 6
    horizon: Optional[float] = None
    t0: Optional[float] = None
    output: Optional[Path] = None
    format: Optional[OutputFormatEnum] = None
    grid: GridConfigSchema = Field(default_factory=GridConfigSchema)
    jobs: int = 1

    @model_validator(mode="after")
    def validate_flags(self) -> "RunConfigSchema":
        """Проверяет значения флагов и называет ошибочный флаг."""
        for c in [self.c, *self.c_values]:
            if not math.isfinite(c):
                raise ValueError("--C: C должна быть конечной (C must be finite)")
        for tau in [self.tau, self.tau0, *self.taus]:
            if tau is not None and not (math.isfinite(tau) and tau > 0.0):
                raise ValueError("--tau: шаг должен быть положительным (tau must be positive)")
        if self.horizon is not None and not (math.isfinite(self.horizon) and self.horizon > 0.0):
            raise ValueError("--T: горизонт должен быть положительным (horizon must be positive)")
        if self.t0 is not None and not math.isfinite(self.t0):
            raise ValueError("--t0: t0 должно быть конечным (t0 must be finite)")
        if self.levels < 1:
            raise ValueError("--levels: нужен хотя бы один уровень (levels must be at least 1)")
        if self.jobs < 1:
            raise ValueError("--jobs: нужен хотя бы один процесс (jobs must be at least 1)")
        self._resolve_selectors()
        if self.command == "integrate" and (self.problem is None or self.tau is None):
            raise ValueError("--problem/--tau: integrate требует задачу и шаг (integrate requires a problem and a step)")
        if self.command == "stability" and self.action is None:
            raise ValueError("stability: не задано действие (action is required: interval, imag, locus, constants)")
        if self.command in ("converge", "bench") and self.problem is None:
            raise ValueError(
                "--table/--example/--experiment: не выбран эксперимент (experiment name is required)"
            )
        return self

    def _resolve_selectors(self) -> None:
        """--table и --example → problem (а для таблиц Лоренца ещё метод и C)."""
        if self.table is not None and self.example is not None:
            raise ValueError("--table/--example: укажите только один селектор (use one selector)")
        if self.table is not None:
            if self.table not in TABLE_PRESETS:
                raise ValueError(f"--table: нет таблицы {self.table} (table must be 1..6)")
            problem, method, c = TABLE_PRESETS[self.table]
            self._set_problem(problem, "--table")
            self.method = method
            if c is not None:
                self.c = c
                self.c_values = []
        elif self.example is not None:
            if self.example not in EXAMPLE_PROBLEMS:
                raise ValueError(f"--example: нет примера {self.example} (example must be 4.1..4.5)")
            self._set_problem(EXAMPLE_PROBLEMS[self.example], "--example")

    def _set_problem(self, problem: str, flag: str) -> None:
        if self.problem is not None and self.problem != problem:
            raise ValueError(f"{flag}: противоречит --experiment {self.problem} (conflicts with --experiment)")
        self.problem = problem

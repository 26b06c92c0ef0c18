"""
ReportSchema — Pydantic схемы отчётов об ошибках.

## Бизнес-контекст
Таблицы относительных ошибок и порядков сходимости, результаты
свипов по шагу τ. Сериализуются в JSON с ключами
{experiment, method, C, tau, rows} и в CSV (одна строка на отсчёт).

## Правила
- Дивергентные значения записываются как null, строка не опускается
- reference/deviation — опубликованные значения и относительное отклонение
"""

import json
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from model.enums import ReferenceKindEnum


class ErrorRowSchema(BaseModel):
    """
    Строка отчёта: один отсчёт (t, τ, метод).

    ## Поля
    - t: момент времени отсчёта
    - tau: шаг
    - steps: число шагов до t
    - errors: относительные ошибки по переменным (null при разносе)
    - order: наблюдаемый порядок log2(err_{k−1}/err_k) (null, если недоступен)
    - reference: опубликованные значения ошибок
    - deviation: |err − reference| / reference
    """

    model_config = ConfigDict(populate_by_name=True)

    t: float
    tau: float
    steps: Optional[int] = None
    errors: list[Optional[float]]
    order: Optional[list[Optional[float]]] = None
    reference: Optional[list[Optional[float]]] = None
    deviation: Optional[list[Optional[float]]] = None
    divergent: bool = False


class ErrorReportSchema(BaseModel):
    """Отчёт об ошибках одного метода на одной задаче."""

    model_config = ConfigDict(populate_by_name=True)

    experiment: str
    method: str
    c: Optional[float] = Field(None, alias="C")
    tau: Optional[float] = None
    reference_kind: ReferenceKindEnum = ReferenceKindEnum.ANALYTIC
    variables: list[str] = Field(default_factory=lambda: ["u"])
    rows: list[ErrorRowSchema] = Field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json", by_alias=True), indent=2) + "\n"


class SweepEntrySchema(BaseModel):
    """
    Результат свипа для одного τ.

    ## Поля
    - z: −τ·sup|L_u| (сравнивается с левым концом I(C)), null вне свипа
    - slope: наклон log10 огибающей ошибки по t на последней четверти отрезка
    - divergent: результат classify_growth (разнос, потолок ошибки или наклон)
    """

    model_config = ConfigDict(populate_by_name=True)

    tau: float
    z: Optional[float] = None
    slope: Optional[float] = None
    blew_up: bool = False
    divergent: bool = False
    report: ErrorReportSchema


class SweepReportSchema(BaseModel):
    """Свип устойчивости по набору шагов."""

    model_config = ConfigDict(populate_by_name=True)

    experiment: str
    method: str
    c: Optional[float] = Field(None, alias="C")
    stiffness: float
    left_endpoint: Optional[float] = None
    entries: list[SweepEntrySchema] = Field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json", by_alias=True), indent=2) + "\n"


class TrajectoryReportSchema(BaseModel):
    """
    Траектория одного запуска integrate.

    ## Поля
    - times / values: узлы и компоненты состояний
    - blew_up / blow_up_step: признак и шаг разноса
    """

    model_config = ConfigDict(populate_by_name=True)

    experiment: str
    method: str
    c: Optional[float] = Field(None, alias="C")
    tau: float
    variables: list[str]
    blew_up: bool = False
    blow_up_step: Optional[int] = None
    times: list[float]
    values: list[list[float]]

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json", by_alias=True), indent=2) + "\n"


class BenchReportSchema(BaseModel):
    """
    Результат bench: ячейки (C, τ) в порядке входа и число вычислений на шаг.

    ## Поля
    - entries: по одной на ячейку
    - evaluations: метод → {rhs, rhs_t, rhs_u, dt_l} за один шаг
    """

    model_config = ConfigDict(populate_by_name=True)

    experiment: str
    jobs: int = 1
    entries: list[SweepEntrySchema] = Field(default_factory=list)
    evaluations: dict[str, dict[str, int]] = Field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json", by_alias=True), indent=2) + "\n"

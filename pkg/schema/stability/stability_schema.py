"""
StabilitySchema — Pydantic схемы отчётов анализа устойчивости.
"""

import json

from pydantic import BaseModel, ConfigDict, Field

from model.enums import ImagKindEnum, LocusRegionEnum, StabilityCaseEnum


class _JsonReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json", by_alias=True), indent=2) + "\n"


class IntervalReportSchema(_JsonReport):
    """I(C): отрезки [lo, hi] по возрастанию."""

    c: float = Field(..., alias="C")
    case: StabilityCaseEnum
    intervals: list[list[float]]


class ImagReportSchema(_JsonReport):
    """I_im(C): вид пересечения и неотрицательные концы ζ."""

    c: float = Field(..., alias="C")
    kind: ImagKindEnum
    endpoints: list[float]
    points: list[float]


class ConstantsReportSchema(_JsonReport):
    """Критические константы (z₁, C₁, z₂, C₂)."""

    z1: float
    c1: float = Field(..., alias="C1")
    z2: float
    c2: float = Field(..., alias="C2")


class LocusReportSchema(_JsonReport):
    """Сводка линии |f| = 1 (сами точки пишутся в CSV); region: full или stable (Re z ≤ 0)."""

    c: float = Field(..., alias="C")
    region: LocusRegionEnum = LocusRegionEnum.FULL
    points: int
    segments: int
    rejected: int
    tolerance: float
    max_residual: float
    grid: dict[str, float]

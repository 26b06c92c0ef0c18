"""
Enums — перечисления для всех моделей.

## Бизнес-контекст
Централизованное хранение режимов весов, идентификаторов задач,
видов методов и классификаций устойчивости.
"""

from enum import Enum


class WeightModeEnum(str, Enum):
    """Режим весов — какой из весов несёт кубическую поправку."""

    ALPHA_SHIFT = "alpha-shift"  # α = 1/3 + (C/60)(τL_u)³, β = 2/3
    BETA_SHIFT = "beta-shift"    # α = 1/3, β = 2/3 + (C/60)(τL_u)³


class MethodKindEnum(str, Enum):
    """Вид метода интегрирования."""

    TWO_STAGE = "two-stage"
    RK4 = "rk4"


class ProblemIdEnum(str, Enum):
    """Закрытый реестр тестовых задач."""

    EXP_DECAY = "exp-decay"
    STIFF_LINEAR = "stiff-linear"
    STIFF_NONLINEAR = "stiff-nonlinear"
    SPRING = "spring"
    LORENZ = "lorenz"


class ProblemFormEnum(str, Enum):
    """Форма задачи: скаляр или система."""

    SCALAR = "scalar"
    SYSTEM = "system"


class StabilityCaseEnum(str, Enum):
    """Режим C для интервала устойчивости."""

    CONVEX = "convex"              # C ≤ 0
    DISCONNECTED = "disconnected"  # 0 < C < C₁
    TANGENT = "tangent"            # C₁ ≤ C < C₂
    MONOTONE = "monotone"          # C ≥ C₂


class ImagKindEnum(str, Enum):
    """Форма пересечения области устойчивости с мнимой осью."""

    SYMMETRIC_INTERVAL = "symmetric-interval"
    TWO_BANDS_PLUS_ORIGIN = "two-bands-plus-origin"
    THREE_POINTS = "three-points"
    ORIGIN_ONLY = "origin-only"


class ReferenceKindEnum(str, Enum):
    """Источник эталона для относительной ошибки."""

    ANALYTIC = "analytic"
    RK4_REFERENCE = "rk4-reference"


class OutputFormatEnum(str, Enum):
    """Формат выходного файла."""

    CSV = "csv"
    JSON = "json"


class LocusRegionEnum(str, Enum):
    """Какая часть линии |f| = 1 выводится."""

    FULL = "full"      # вся линия |f| = 1 на сетке
    STABLE = "stable"  # граница R_A(C): точки с Re z ≤ 0

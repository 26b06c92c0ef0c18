"""
Model — доменные типы.

Экспортирует все модели для удобного импорта:
    from model import ScalarProblem, State, WeightPolicy
"""

from .enums import (
    WeightModeEnum,
    MethodKindEnum,
    ProblemIdEnum,
    ProblemFormEnum,
    StabilityCaseEnum,
    ImagKindEnum,
    ReferenceKindEnum,
    OutputFormatEnum,
    LocusRegionEnum,
)
from .problem_model import ScalarProblem, SystemProblem, State, Problem
from .weight_model import WeightPolicy
from .trajectory_model import MethodSpec, StepRecord, Trajectory
from .stability_model import (
    IntervalSet,
    ImagIntersection,
    GridSpec,
    BoundaryLocus,
)

__all__ = [
    "WeightModeEnum",
    "MethodKindEnum",
    "ProblemIdEnum",
    "ProblemFormEnum",
    "StabilityCaseEnum",
    "ImagKindEnum",
    "ReferenceKindEnum",
    "OutputFormatEnum",
    "LocusRegionEnum",
    "ScalarProblem",
    "SystemProblem",
    "State",
    "Problem",
    "WeightPolicy",
    "MethodSpec",
    "StepRecord",
    "Trajectory",
    "IntervalSet",
    "ImagIntersection",
    "GridSpec",
    "BoundaryLocus",
]

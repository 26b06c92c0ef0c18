"""
Service — вычислительная логика приложения.

Экспортирует основные сервисы для удобного импорта:
    from service import IntegrateService, IntervalService, ConvergenceService
"""

from .ode import ConsistencyService, DerivativeService, EvaluationCounter
from .integrator import IntegrateService, RK4Service, TwoStageService
from .stability import ImagAxisService, IntervalService, LocusService, StabilityFunctionService
from .experiment import (
    BenchService,
    ConvergenceService,
    LorenzService,
    ReferenceService,
    ReportService,
    SpringService,
    SweepService,
    build_problem,
)
from .export import ExportService

__all__ = [
    "ConsistencyService",
    "DerivativeService",
    "EvaluationCounter",
    "IntegrateService",
    "RK4Service",
    "TwoStageService",
    "ImagAxisService",
    "IntervalService",
    "LocusService",
    "StabilityFunctionService",
    "BenchService",
    "ConvergenceService",
    "LorenzService",
    "ReferenceService",
    "ReportService",
    "SpringService",
    "SweepService",
    "build_problem",
    "ExportService",
]

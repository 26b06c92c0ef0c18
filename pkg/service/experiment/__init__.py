"""
Experiment — воспроизведение численных экспериментов.
"""

from .bench_service import BenchService, run_cell
from .convergence_service import ConvergenceService
from .lorenz_service import LORENZ_SAMPLE_TIMES, LorenzService
from .problem_factory import DEFAULT_PARAMS, ProblemSetup, build_problem, parse_problem_id
from .reference_service import REFERENCE_TAU, ReferenceService
from .report_service import ReportService
from .spring_service import SPRING_SAMPLE_TIMES, SpringService, table_tau
from .sweep_service import SweepService

__all__ = [
    "DEFAULT_PARAMS",
    "LORENZ_SAMPLE_TIMES",
    "REFERENCE_TAU",
    "SPRING_SAMPLE_TIMES",
    "BenchService",
    "ConvergenceService",
    "LorenzService",
    "ProblemSetup",
    "ReferenceService",
    "ReportService",
    "SpringService",
    "SweepService",
    "build_problem",
    "parse_problem_id",
    "run_cell",
    "table_tau",
]

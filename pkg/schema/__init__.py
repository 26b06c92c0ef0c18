"""
Schema — Pydantic схемы для валидации данных.

Экспортирует все схемы для удобного импорта:
    from schema import RunConfigSchema, ErrorReportSchema
"""

from .config.run_config_schema import GridConfigSchema, RunConfigSchema
from .experiment.experiment_schema import ExperimentSpecSchema
from .report.report_schema import (
    BenchReportSchema,
    ErrorReportSchema,
    ErrorRowSchema,
    SweepEntrySchema,
    SweepReportSchema,
    TrajectoryReportSchema,
)
from .stability.stability_schema import (
    ConstantsReportSchema,
    ImagReportSchema,
    IntervalReportSchema,
    LocusReportSchema,
)

__all__ = [
    "GridConfigSchema",
    "RunConfigSchema",
    "ExperimentSpecSchema",
    "BenchReportSchema",
    "ErrorReportSchema",
    "ErrorRowSchema",
    "SweepEntrySchema",
    "SweepReportSchema",
    "TrajectoryReportSchema",
    "ConstantsReportSchema",
    "ImagReportSchema",
    "IntervalReportSchema",
    "LocusReportSchema",
]

"""
Report schemas — Pydantic схемы отчётов об ошибках и траекторий.
"""

from .report_schema import (
    BenchReportSchema,
    ErrorReportSchema,
    ErrorRowSchema,
    SweepEntrySchema,
    SweepReportSchema,
    TrajectoryReportSchema,
)

__all__ = [
    "BenchReportSchema",
    "ErrorReportSchema",
    "ErrorRowSchema",
    "SweepEntrySchema",
    "SweepReportSchema",
    "TrajectoryReportSchema",
]

"""
Stability schemas — Pydantic схемы отчётов анализа устойчивости.
"""

from .stability_schema import (
    ConstantsReportSchema,
    ImagReportSchema,
    IntervalReportSchema,
    LocusReportSchema,
)

__all__ = [
    "ConstantsReportSchema",
    "ImagReportSchema",
    "IntervalReportSchema",
    "LocusReportSchema",
]

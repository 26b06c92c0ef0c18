"""
Stability — анализ абсолютной устойчивости функции f(z, C).
"""

from .stability_function_service import StabilityFunctionService
from .interval_service import IntervalService
from .imag_axis_service import ImagAxisService
from .locus_service import LocusService

__all__ = [
    "StabilityFunctionService",
    "IntervalService",
    "ImagAxisService",
    "LocusService",
]

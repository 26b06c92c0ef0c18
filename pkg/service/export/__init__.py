"""
Export — сериализация результатов в CSV и JSON.
"""

from .export_service import BLOW_UP_MARKER, ExportService, csv_text, format_float, format_reference

__all__ = [
    "BLOW_UP_MARKER",
    "ExportService",
    "csv_text",
    "format_float",
    "format_reference",
]

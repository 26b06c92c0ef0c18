"""
Config schemas — Pydantic схемы параметров запуска CLI.
"""

from .run_config_schema import GridConfigSchema, RunConfigSchema

__all__ = ["GridConfigSchema", "RunConfigSchema"]

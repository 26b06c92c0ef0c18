"""
Experiment schemas — Pydantic схемы спецификации эксперимента.
"""

from .experiment_schema import ExperimentSpecSchema

__all__ = ["ExperimentSpecSchema"]

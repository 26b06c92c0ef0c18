"""
ODE — полная производная D_t L и вспомогательные проверки задач.
"""

from .derivative_service import DerivativeService
from .consistency_service import ConsistencyService
from .evaluation_counter import EvaluationCounter

__all__ = [
    "DerivativeService",
    "ConsistencyService",
    "EvaluationCounter",
]

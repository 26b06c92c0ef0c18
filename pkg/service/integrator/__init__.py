"""
Integrator — двухстадийная схема, RK4 и драйвер траектории.
"""

from .two_stage_service import TwoStageService
from .rk4_service import RK4Service
from .integrate_service import IntegrateService

__all__ = [
    "TwoStageService",
    "RK4Service",
    "IntegrateService",
]

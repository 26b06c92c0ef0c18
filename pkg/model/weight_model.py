"""
WeightModel — семейство переменных весов (α, β).

## Бизнес-контекст
Четвёртый порядок требует α + β = 1 + O(τ³) и β = 2/3 + O(τ).
Реализовано семейство с константой C:
α + β = 1 + (C/60)(τ·L_u)³, поправка несётся α (AlphaShift) или β (BetaShift).
"""

import math
from dataclasses import dataclass

from core.exceptions import ValidationError
from model.enums import WeightModeEnum

ALPHA_BASE = 1.0 / 3.0
BETA_BASE = 2.0 / 3.0


@dataclass(frozen=True)
class WeightPolicy:
    """Константа C и режим сдвига."""

    c: float = 0.0
    mode: WeightModeEnum = WeightModeEnum.ALPHA_SHIFT

    def __post_init__(self):
        if not math.isfinite(self.c):
            raise ValidationError(f"--C: C должна быть конечной, получено {self.c!r}")
        object.__setattr__(self, "mode", WeightModeEnum(self.mode))

    def shift(self, x: float) -> float:
        """(C/60)·x³ для x = τ·L_u."""
        return (self.c / 60.0) * (x * x * x)

    def weights(self, x: float) -> tuple[float, float]:
        """
        Веса (α, β) для x = τ·L_u(tⁿ, uⁿ).

        ## Выходные данные
        - (α, β), причём α + β − 1 = shift(x) в точной арифметике
        """
        s = self.shift(x)
        if self.mode == WeightModeEnum.ALPHA_SHIFT:
            return ALPHA_BASE + s, BETA_BASE
        return ALPHA_BASE, BETA_BASE + s

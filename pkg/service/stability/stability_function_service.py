"""
StabilityFunctionService — функция устойчивости f(z, C) и её производные.

## Бизнес-контекст
На модельной задаче u' = λu шаг схемы равен умножению на
f(z, C) = 1 + z + z²/2 + z³/6 + z⁴/24 + (C/120)z⁵, z = τλ.
Все методы векторизованы: z может быть скаляром или массивом numpy
(вещественным или комплексным).
"""

import numpy as np


class StabilityFunctionService:
    """Значения f(z, C), производных по z и вспомогательных многочленов."""

    @staticmethod
    def f(c: float, z):
        """f(z, C) по схеме Горнера."""
        return ((((c / 120.0 * z + 1.0 / 24.0) * z + 1.0 / 6.0) * z + 0.5) * z + 1.0) * z + 1.0

    @staticmethod
    def fz(c: float, z):
        """f_z = 1 + z + z²/2 + z³/6 + (C/24)z⁴."""
        return (((c / 24.0 * z + 1.0 / 6.0) * z + 0.5) * z + 1.0) * z + 1.0

    @staticmethod
    def fzz(c: float, z):
        """f_zz = 1 + z + z²/2 + (C/6)z³."""
        return ((c / 6.0 * z + 0.5) * z + 1.0) * z + 1.0

    @staticmethod
    def fzzz(c: float, z):
        """f_zzz = 1 + z + (C/2)z²."""
        return (c / 2.0 * z + 1.0) * z + 1.0

    @staticmethod
    def fc(z):
        """∂f/∂C = z⁵/120: при z < 0 увеличение C уменьшает f."""
        return z**5 / 120.0

    def derivatives(self, c: float, z):
        """
        Совместное вычисление (f, f_z, f_zz, f_zzz).

        ## Выходные данные
        - кортеж из четырёх значений той же формы, что z
        """
        return self.f(c, z), self.fz(c, z), self.fzz(c, z), self.fzzz(c, z)

    def is_abs_stable(self, c: float, z) -> bool:
        """z ∈ R_A(C) = {z : |f(z, C)| ≤ 1, Re z ≤ 0}."""
        z = complex(z)
        return bool(abs(self.f(c, z)) <= 1.0 and z.real <= 0.0)

    @staticmethod
    def lemma_g(z):
        """g(z) = f(z, C) − (z/5)·f_z(z, C) = 1 + 0.8z + 0.3z² + z³/15 + z⁴/120 (не зависит от C)."""
        return (((z / 120.0 + 1.0 / 15.0) * z + 0.3) * z + 0.8) * z + 1.0

    @staticmethod
    def imag_quadratic(eta, c: float):
        """
        g(η, C) = C²η² + 5(5 − 8C)η + 40(6C − 5).

        Для η = ζ² > 0: |f(iζ, C)|² − 1 = η³·g(η, C)/14400.
        """
        return (c * c * eta + 5.0 * (5.0 - 8.0 * c)) * eta + 40.0 * (6.0 * c - 5.0)

    @staticmethod
    def imag_discriminant(c: float) -> float:
        """Дискриминант g(·, C) в факторизованном виде 5(5 − 4C)(48C² − 60C + 25)."""
        return 5.0 * (5.0 - 4.0 * c) * ((48.0 * c - 60.0) * c + 25.0)

"""
Commands — подкоманды CLI.
"""

from .bench import register as register_bench
from .converge import register as register_converge
from .integrate import register as register_integrate
from .stability import register as register_stability

__all__ = [
    "register_bench",
    "register_converge",
    "register_integrate",
    "register_stability",
]

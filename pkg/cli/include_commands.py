"""
Include Commands — подключение всех подкоманд CLI.

## Бизнес-контекст
Централизованная регистрация подкоманд в корневом парсере.
"""

from core import subcommands

from .commands import register_bench, register_converge, register_integrate, register_stability

register_integrate(subcommands)
register_stability(subcommands)
register_converge(subcommands)
register_bench(subcommands)

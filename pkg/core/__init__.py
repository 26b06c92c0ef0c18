"""
Core — ядро приложения.

Экспортирует основные компоненты:
- app: корневой парсер CLI
- subcommands: контейнер подкоманд
- configs: конфигурация приложения
"""

from .loader import app, subcommands, setup_logging
from .config import configs

__all__ = [
    "app",
    "subcommands",
    "setup_logging",
    "configs",
]

"""
Loader — инициализация CLI приложения.

## Бизнес-контекст
Создаёт корневой argparse-парсер с метаданными и настраивает логирование.
Подкоманды регистрируются в cli/include_commands.py.

## Выходные данные
- app: корневой ArgumentParser
- subcommands: контейнер подкоманд
- setup_logging: настройка корневого логгера
"""

import argparse
import logging

from .config import configs
from .exceptions import ValidationError

# Metadata
TITLE = "two-stage"
DESCRIPTION = (
    "Двухстадийная схема четвёртого порядка с переменными весами: "
    "интегрирование, анализ абсолютной устойчивости, воспроизведение экспериментов"
)
VERSION = "1.0.0"

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def setup_logging() -> None:
    """Настроить корневой логгер по LOG_LEVEL / MODE_DEBUG (однократно)."""
    level = logging.DEBUG if configs.MODE_DEBUG else configs.LOG_LEVEL.upper()
    root = logging.getLogger()
    if not root.handlers:
        logging.basicConfig(level=level, format=LOG_FORMAT)
    else:
        root.setLevel(level)


class AppArgumentParser(argparse.ArgumentParser):
    """Парсер, который вместо sys.exit(2) поднимает ValidationError."""

    def error(self, message: str):
        raise ValidationError(message)


# CLI app
app = AppArgumentParser(prog=TITLE, description=DESCRIPTION)
app.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
subcommands = app.add_subparsers(dest="command", metavar="COMMAND")

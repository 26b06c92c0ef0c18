"""
CLI — командная строка интегратора.

## Бизнес-контекст
Подкоманды integrate, stability, converge, bench.
Коды завершения: 0 успех, 1 ошибка конфигурации, 2 численный разнос,
3 внутренняя ошибка.
"""

import logging
from typing import Optional, Sequence

from pydantic import ValidationError as PydanticValidationError

from core import app, setup_logging
from core.exceptions import AppException, ValidationError

from . import include_commands  # noqa: F401
from .commands.options import config_from_args
from .exception_handlers import app_exception_handler, validation_exception_handler

logger = logging.getLogger(__name__)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Разобрать флаги и выполнить подкоманду.

    ## Входные данные
    - argv: аргументы (по умолчанию sys.argv[1:])

    ## Выходные данные
    - код завершения процесса
    """
    setup_logging()
    try:
        args = app.parse_args(argv)
        if args.command is None:
            raise ValidationError("COMMAND: one of integrate, stability, converge, bench is required")
        cfg = config_from_args(args)
        logger.debug("Конфигурация запуска: %s", cfg)
        return args.handler(cfg)
    except AppException as exc:
        return app_exception_handler(exc)
    except PydanticValidationError as exc:
        return validation_exception_handler(exc)


__all__ = ["app", "run"]

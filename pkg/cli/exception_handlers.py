"""
Exception Handlers — обработчики исключений для CLI.

## Бизнес-контекст
Преобразует бизнес-исключения в коды завершения процесса:
- 1: ошибка конфигурации (флаги, неизвестная задача, режим весов)
- 2: численный разнос или вырожденный вес
- 3: внутренняя ошибка
Сообщение печатается в stderr.
"""

import sys

from pydantic import ValidationError as PydanticValidationError

from core.exceptions import AppException

EXIT_OK = 0
EXIT_INTERNAL = 3

EXIT_CODES = {
    "VALIDATION_ERROR": 1,
    "NOT_FOUND": 1,
    "UNSUPPORTED_MODE": 1,
    "NUMERICAL_BLOW_UP": 2,
    "WEIGHT_DEGENERACY": 2,
}


def app_exception_handler(exc: AppException) -> int:
    """
    Обработчик бизнес-исключений.

    ## Входные данные
    - exc: исключение AppException

    ## Обработка
    Маппинг кодов ошибок на коды завершения.

    ## Выходные данные
    - код завершения процесса
    """
    print(f"error [{exc.code}]: {exc.message}", file=sys.stderr)
    return EXIT_CODES.get(exc.code, EXIT_INTERNAL)


def validation_exception_handler(exc: PydanticValidationError) -> int:
    """Ошибки pydantic: каждое сообщение с именем флага, код 1."""
    messages = []
    for error in exc.errors():
        message = str(error["msg"]).removeprefix("Value error, ")
        loc = "-".join(str(part) for part in error["loc"])
        messages.append(f"--{loc}: {message}" if loc else message)
    print("error [VALIDATION_ERROR]: " + "; ".join(messages), file=sys.stderr)
    return EXIT_CODES["VALIDATION_ERROR"]

"""
Main — точка входа приложения.

## Бизнес-контекст
Запускает CLI двухстадийного интегратора и возвращает код завершения.
"""

import sys

from cli import run

if __name__ == "__main__":
    sys.exit(run())

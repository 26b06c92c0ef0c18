"""
Configs — конфигурация приложения.

## Бизнес-контекст
Централизованное хранение всех настроек интегратора.
Загружает значения из переменных окружения с fallback на значения по умолчанию.

## Входные данные
- Переменные окружения (MODE_DEBUG, LOG_LEVEL, REFERENCE_CACHE_DIR, *_GUARD, ...)

## Обработка
- Загрузка через python-dotenv
- Приведение типов

## Выходные данные
- Singleton объект configs с типизированными настройками
"""

import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()


class Configs:
    # Debug mode
    MODE_DEBUG: bool = os.getenv("MODE_DEBUG", "False") == "True"
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")

    # Integrators
    OVERFLOW_GUARD: float = float(os.getenv("OVERFLOW_GUARD", "1e100"))
    BETA_GUARD: float = float(os.getenv("BETA_GUARD", "1e-3"))

    # Stability analysis
    ROOT_TOLERANCE: float = float(os.getenv("ROOT_TOLERANCE", "1e-12"))
    LOCUS_TOLERANCE: float = float(os.getenv("LOCUS_TOLERANCE", "1e-9"))
    LOCUS_NX: int = int(os.getenv("LOCUS_NX", "1401"))
    LOCUS_NY: int = int(os.getenv("LOCUS_NY", "1001"))

    # Experiments
    GROWTH_SLOPE_THRESHOLD: float = float(os.getenv("GROWTH_SLOPE_THRESHOLD", "0.1"))
    GROWTH_WINDOW_FRACTION: float = float(os.getenv("GROWTH_WINDOW_FRACTION", "0.25"))
    GROWTH_ERROR_FLOOR: float = float(os.getenv("GROWTH_ERROR_FLOOR", "1e-12"))
    GROWTH_ERROR_CAP: float = float(os.getenv("GROWTH_ERROR_CAP", "1e-2"))
    DEFAULT_JOBS: int = int(os.getenv("DEFAULT_JOBS", "1"))

    # Reference cache
    REFERENCE_CACHE_DIR: str = os.getenv("REFERENCE_CACHE_DIR", "")

    @property
    def reference_cache_path(self) -> Path:
        """Каталог кэша эталонных траекторий (читается из окружения при каждом вызове)."""
        raw = os.getenv("REFERENCE_CACHE_DIR", self.REFERENCE_CACHE_DIR)
        if raw:
            return Path(raw).expanduser()
        return Path.home() / ".cache" / "two-stage-integrator"


configs = Configs()

"""
BaseRepository — базовый класс файлового репозитория.

## Бизнес-контекст
Хранение результатов вычислений на диске под ключом.
Использует Generic для типизации хранимого объекта.

## Методы
- get_by_key: получение по ключу
- save: запись
- delete: удаление
- path_for: путь к файлу ключа
"""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Generic, Optional, TypeVar

from core.exceptions import StorageError

ItemType = TypeVar("ItemType")


class BaseRepository(ABC, Generic[ItemType]):
    """Базовый репозиторий: один файл на ключ в каталоге root."""

    suffix: str = ""

    def __init__(self, root: Path):
        self.root = Path(root)

    def path_for(self, key: str) -> Path:
        return self.root / f"{key}{self.suffix}"

    def get_by_key(self, key: str) -> Optional[ItemType]:
        """
        Получить объект по ключу.

        ## Выходные данные
        - объект или None, если файла нет или он повреждён
        """
        path = self.path_for(key)
        if not path.exists():
            return None
        try:
            return self._read(path)
        except (OSError, ValueError, KeyError):
            return None

    def save(self, key: str, item: ItemType) -> Path:
        """
        Записать объект под ключом.

        ## Исключения
        - StorageError: каталог недоступен для записи
        """
        path = self.path_for(key)
        try:
            self.root.mkdir(parents=True, exist_ok=True)
            self._write(path, item)
        except OSError as exc:
            raise StorageError(f"запись {path}: {exc}") from exc
        return path

    def delete(self, key: str) -> bool:
        """
        Удалить объект по ключу.

        ## Выходные данные
        - True если удалено, False если не найдено
        """
        path = self.path_for(key)
        if not path.exists():
            return False
        path.unlink()
        return True

    @abstractmethod
    def _read(self, path: Path) -> ItemType:
        ...

    @abstractmethod
    def _write(self, path: Path, item: ItemType) -> None:
        ...

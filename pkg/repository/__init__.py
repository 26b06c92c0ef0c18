"""
Repository — дисковое хранение результатов.
"""

from .base_repository import BaseRepository
from .reference_repository import ReferenceRepository, reference_key

__all__ = [
    "BaseRepository",
    "ReferenceRepository",
    "reference_key",
]

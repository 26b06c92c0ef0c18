"""
ReferenceRepository — дисковый кэш эталонных траекторий.

## Бизнес-контекст
Эталон для задачи Лоренца — RK4 с τ = 0.001 на [0, 10] (10⁴ шагов).
Он переиспользуется всеми таблицами, поэтому сохраняется в .npz
под ключом SHA-256 от (задача, параметры, τ, метод, отрезок).

## Зависимости
- REFERENCE_CACHE_DIR: каталог кэша (configs.reference_cache_path)
"""

import hashlib
import json
import logging
import os
import zipfile
from pathlib import Path
from typing import Callable, Optional

import numpy as np

from core.config import configs
from model.problem_model import State
from model.trajectory_model import Trajectory
from repository.base_repository import BaseRepository

logger = logging.getLogger(__name__)


def reference_key(
    problem: str,
    params: dict,
    tau: float,
    method: str,
    t0: float,
    t_end: float,
) -> str:
    """SHA-256 от канонического JSON описания траектории."""
    payload = json.dumps(
        {
            "problem": problem,
            "params": {k: float(v) for k, v in params.items()},
            "tau": float(tau),
            "method": method,
            "t0": float(t0),
            "t_end": float(t_end),
        },
        sort_keys=True,
    )
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


class ReferenceRepository(BaseRepository[Trajectory]):
    """Кэш траекторий в формате npz."""

    suffix = ".npz"

    def __init__(self, root: Optional[Path] = None):
        super().__init__(root or configs.reference_cache_path)

    def _read(self, path: Path) -> Trajectory:
        try:
            with np.load(path, allow_pickle=False) as data:
                times = data["times"]
                values = data["values"]
                scalar = bool(data["scalar"])
                tau = float(data["step_size"])
                tag = str(data["method_tag"])
                blew_up = bool(data["blew_up"])
        except zipfile.BadZipFile as exc:
            raise ValueError(f"повреждённый файл {path}") from exc
        states = [
            State(float(t), float(v[0]) if scalar else np.array(v))
            for t, v in zip(times, values)
        ]
        return Trajectory(states=states, step_size=tau, method_tag=tag, blew_up=blew_up)

    def _write(self, path: Path, item: Trajectory) -> None:
        tmp = path.with_name(f"{path.stem}.{os.getpid()}.tmp.npz")
        np.savez(
            tmp,
            times=item.times,
            values=item.values,
            scalar=not isinstance(item.states[0].u, np.ndarray),
            step_size=item.step_size,
            method_tag=item.method_tag,
            blew_up=item.blew_up,
        )
        os.replace(tmp, path)

    def get_or_create(self, key: str, build: Callable[[], Trajectory]) -> Trajectory:
        """
        Получить траекторию из кэша или построить и сохранить.

        ## Входные данные
        - key: ключ (reference_key)
        - build: построение траектории при промахе
        """
        cached = self.get_by_key(key)
        if cached is not None:
            logger.info("Эталон из кэша: %s", key[:12])
            return cached

        logger.info("Эталон не найден в кэше, вычисление: %s", key[:12])
        trajectory = build()
        path = self.save(key, trajectory)
        logger.info("Эталон сохранён: %s", path)
        return trajectory

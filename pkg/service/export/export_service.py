"""
ExportService — запись результатов в CSV и JSON.

## Бизнес-контекст
Файлы результатов должны быть стабильны между запусками:
- CSV: строка заголовка, запятая, окончания строк LF
- числа пишутся через repr (кратчайшая десятичная запись, точный round-trip)
- опубликованные значения пишутся как %.4e, как в таблицах
- отсутствующие значения (разнос) — пустые ячейки
- JSON: model_dump(by_alias=True), отступ 2

## Исключения
- StorageError: файл не удалось записать
"""

import csv
import io
import logging
from pathlib import Path
from typing import Iterable, Optional, Sequence

from core.exceptions import StorageError
from model.enums import LocusRegionEnum
from model.stability_model import BoundaryLocus
from model.trajectory_model import Trajectory
from schema.report.report_schema import (
    ErrorReportSchema,
    SweepEntrySchema,
    TrajectoryReportSchema,
)

logger = logging.getLogger(__name__)

BLOW_UP_MARKER = "blow-up"


def format_float(value: Optional[float]) -> str:
    return "" if value is None else repr(float(value))


def format_reference(value: Optional[float]) -> str:
    return "" if value is None else "%.4e" % value


def csv_text(header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _padded(values: Optional[Sequence[Optional[float]]], n: int, fmt=format_float) -> list[str]:
    if values is None:
        return [""] * n
    return [fmt(v) for v in values]


def _report_header(variables: Sequence[str]) -> list[str]:
    return (
        ["method", "t", "tau", "steps"]
        + [f"err_{v}" for v in variables]
        + [f"order_{v}" for v in variables]
        + [f"ref_{v}" for v in variables]
        + [f"dev_{v}" for v in variables]
        + ["divergent"]
    )


def _report_rows(report: ErrorReportSchema) -> list[list[str]]:
    n = len(report.variables)
    rows = []
    for row in report.rows:
        rows.append(
            [report.method, format_float(row.t), format_float(row.tau), "" if row.steps is None else str(row.steps)]
            + _padded(row.errors, n)
            + _padded(row.order, n)
            + _padded(row.reference, n, format_reference)
            + _padded(row.deviation, n)
            + ["true" if row.divergent else "false"]
        )
    return rows


class ExportService:
    """Сериализация отчётов, траекторий и линии |f| = 1."""

    @staticmethod
    def report_to_csv(report: ErrorReportSchema) -> str:
        """Отчёт об ошибках в CSV: одна строка на отсчёт (t, τ, метод)."""
        return csv_text(_report_header(report.variables), _report_rows(report))

    @staticmethod
    def entries_to_csv(entries: Sequence[SweepEntrySchema]) -> str:
        """Строки отчётов всех ячеек, дополненные z, наклоном и классом."""
        if not entries:
            return csv_text(["z", "slope", "classification"], [])
        variables = entries[0].report.variables
        header = ["z", "slope", "classification"] + _report_header(variables)
        rows = []
        for entry in entries:
            prefix = [format_float(entry.z), format_float(entry.slope), "divergent" if entry.divergent else "stable"]
            rows.extend(prefix + r for r in _report_rows(entry.report))
        return csv_text(header, rows)

    @staticmethod
    def trajectory_report(
        traj: Trajectory,
        experiment: str,
        variables: Sequence[str],
        c: Optional[float],
    ) -> TrajectoryReportSchema:
        return TrajectoryReportSchema(
            experiment=experiment,
            method=traj.method_tag,
            c=c,
            tau=traj.step_size,
            variables=list(variables),
            blew_up=traj.blew_up,
            blow_up_step=traj.blow_up_step,
            times=[float(t) for t in traj.times],
            values=[[float(x) for x in row] for row in traj.values],
        )

    @staticmethod
    def trajectory_to_csv(traj: Trajectory, variables: Sequence[str]) -> str:
        """
        Траектория в CSV (t, компоненты u).

        При разносе последней строкой идёт маркер: 'blow-up', номер шага, пустые ячейки.
        """
        rows = [[format_float(s.t)] + [format_float(x) for x in s.components()] for s in traj.states]
        if traj.blew_up:
            step = "" if traj.blow_up_step is None else str(traj.blow_up_step)
            rows.append([BLOW_UP_MARKER, step] + [""] * (len(variables) - 1))
        return csv_text(["t", *variables], rows)

    @staticmethod
    def locus_to_csv(locus: BoundaryLocus, region: LocusRegionEnum = LocusRegionEnum.FULL) -> str:
        """Точки линии |f| = 1 (вся линия или часть с Re z ≤ 0): столбцы re, im."""
        points = locus.region_points(region)
        return csv_text(["re", "im"], ([format_float(z.real), format_float(z.imag)] for z in points))

    @staticmethod
    def write_text(path: Path, text: str) -> Path:
        """Записать текст с окончаниями строк LF."""
        path = Path(path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as e:
            raise StorageError(f"не удалось записать {path}: {e}")
        logger.info("Записан файл %s", path)
        return path

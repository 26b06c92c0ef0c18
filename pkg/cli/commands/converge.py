"""
converge — таблица сходимости при делении шага пополам.

## Входные данные
- --table (или --experiment), --method, --C, --mode, --tau0, --levels, --T, --output, --format

## Выходные данные
- --table 1 и задачи реестра: строка на уровень τ0/2^k с ошибкой, порядком,
  опубликованным значением и относительным отклонением
- --table 2..6: строки опубликованной таблицы пружины или задачи Лоренца
  на её шагах, в формате bench
"""

import argparse

from model.enums import OutputFormatEnum
from schema.config.run_config_schema import TABLE_PRESETS, RunConfigSchema
from service.experiment.bench_service import BenchService
from service.experiment.convergence_service import ConvergenceService
from service.export.export_service import ExportService

from .options import add_method_options, add_output_options, emit_pair, experiment_spec


def register(subcommands) -> argparse.ArgumentParser:
    parser = subcommands.add_parser(
        "converge",
        help="таблица сходимости",
        description="Ошибки и наблюдаемые порядки для шагов τ0/2^k.",
    )
    parser.add_argument("--table", type=int, choices=sorted(TABLE_PRESETS), help="номер опубликованной таблицы")
    parser.add_argument("--experiment", dest="problem", help="задача реестра")
    add_method_options(parser)
    parser.add_argument("--tau0", type=float, help="опорный шаг (для exp-decay берётся из таблицы)")
    parser.add_argument("--levels", type=int, help="число уровней (по умолчанию 6)")
    parser.add_argument("--T", dest="horizon", type=float, help="горизонт")
    add_output_options(parser)
    parser.set_defaults(handler=cmd_converge)
    return parser


def cmd_converge(cfg: RunConfigSchema) -> int:
    export = ExportService()
    spec = experiment_spec(cfg)
    if cfg.table is not None and cfg.table != 1:
        bench = BenchService()
        report = bench.run([spec], bench.table_taus(spec), cfg.jobs)
        emit_pair(export.entries_to_csv(report.entries), report.to_json(), cfg, OutputFormatEnum.CSV)
        return 0

    report = ConvergenceService().run(spec)
    emit_pair(export.report_to_csv(report), report.to_json(), cfg, OutputFormatEnum.CSV)
    return 0

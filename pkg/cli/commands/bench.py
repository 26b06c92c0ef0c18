"""
bench — пакетный прогон эксперимента по ячейкам (C, τ).

## Бизнес-контекст
Воспроизводит таблицы пружинного осциллятора и задачи Лоренца,
свипы на жёстких задачах. Ячейки считаются в пуле из --jobs процессов,
результат собирается в порядке входа.

## Входные данные
- --example (или --experiment), --method, --C (несколько значений), --mode, --tau (несколько), --T, --jobs
"""

import argparse

from core.config import configs
from model.enums import MethodKindEnum, OutputFormatEnum
from schema.config.run_config_schema import EXAMPLE_PROBLEMS, RunConfigSchema
from service.experiment.bench_service import BenchService
from service.export.export_service import ExportService

from .options import add_method_options, add_output_options, emit_pair, experiment_spec


def register(subcommands) -> argparse.ArgumentParser:
    parser = subcommands.add_parser(
        "bench",
        help="пакетный прогон эксперимента",
        description="Ячейки (C, τ) эксперимента с опубликованными значениями для сравнения.",
    )
    parser.add_argument("--example", choices=sorted(EXAMPLE_PROBLEMS), help="номер примера")
    parser.add_argument("--experiment", dest="problem", help="задача реестра")
    add_method_options(parser, many_c=True)
    parser.add_argument("--tau", dest="taus", type=float, nargs="+", metavar="TAU", help="шаги")
    parser.add_argument("--T", dest="horizon", type=float, help="горизонт")
    parser.add_argument("--jobs", type=int, default=configs.DEFAULT_JOBS, help="число процессов")
    add_output_options(parser)
    parser.set_defaults(handler=cmd_bench)
    return parser


def cmd_bench(cfg: RunConfigSchema) -> int:
    if cfg.method == MethodKindEnum.RK4:
        specs = [experiment_spec(cfg)]
    else:
        specs = [experiment_spec(cfg, c) for c in (cfg.c_values or [cfg.c])]
    report = BenchService().run(specs, cfg.taus or None, cfg.jobs)
    emit_pair(ExportService().entries_to_csv(report.entries), report.to_json(), cfg, OutputFormatEnum.CSV)
    return 0

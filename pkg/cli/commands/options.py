"""
Options — общие флаги подкоманд и сборка RunConfigSchema.
"""

import argparse
import sys
from pathlib import Path
from typing import Optional

from model.enums import MethodKindEnum, OutputFormatEnum, WeightModeEnum
from model.trajectory_model import MethodSpec
from model.weight_model import WeightPolicy
from schema.config.run_config_schema import RunConfigSchema
from schema.experiment.experiment_schema import ExperimentSpecSchema
from service.experiment.problem_factory import parse_problem_id
from service.export.export_service import ExportService

GRID_FIELDS = ("re_min", "re_max", "im_min", "im_max", "nx", "ny")


def add_method_options(parser: argparse.ArgumentParser, many_c: bool = False) -> None:
    parser.add_argument("--method", choices=[m.value for m in MethodKindEnum], default=MethodKindEnum.TWO_STAGE.value)
    if many_c:
        parser.add_argument("--C", dest="c_values", type=float, nargs="+", metavar="C", help="значения константы C")
    else:
        parser.add_argument("--C", dest="c", type=float, help="константа C весовой функции")
    parser.add_argument("--mode", choices=[m.value for m in WeightModeEnum], default=WeightModeEnum.ALPHA_SHIFT.value)


def add_output_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--output", type=Path, help="файл результата (по умолчанию stdout)")
    parser.add_argument("--format", choices=[f.value for f in OutputFormatEnum])


def config_from_args(args: argparse.Namespace) -> RunConfigSchema:
    """Флаги argparse → RunConfigSchema (None означает значение по умолчанию)."""
    payload = {k: v for k, v in vars(args).items() if k != "handler" and v is not None}
    grid = {k: payload.pop(k) for k in GRID_FIELDS if k in payload}
    if grid:
        payload["grid"] = grid
    return RunConfigSchema.model_validate(payload)


def method_spec(cfg: RunConfigSchema) -> MethodSpec:
    if cfg.method == MethodKindEnum.RK4:
        return MethodSpec.rk4()
    return MethodSpec.two_stage(WeightPolicy(c=cfg.c, mode=cfg.mode))


def experiment_spec(cfg: RunConfigSchema, c: Optional[float] = None) -> ExperimentSpecSchema:
    return ExperimentSpecSchema(
        problem_id=parse_problem_id(cfg.problem),
        method=cfg.method,
        c=cfg.c if c is None else c,
        mode=cfg.mode,
        tau0=cfg.tau0,
        levels=cfg.levels,
        horizon=cfg.horizon,
    )


def emit(text: str, output: Optional[Path]) -> None:
    """Записать результат в файл или в stdout."""
    if output is None:
        sys.stdout.write(text)
    else:
        ExportService.write_text(output, text)


def emit_pair(csv_text: str, json_text: str, cfg: RunConfigSchema, default: OutputFormatEnum) -> None:
    """
    Таблица в CSV и JSON.

    С --output пишутся оба файла (<output>.csv и <output>.json),
    без него в stdout печатается выбранный формат.
    """
    if cfg.output is not None:
        ExportService.write_text(cfg.output.with_suffix(".csv"), csv_text)
        ExportService.write_text(cfg.output.with_suffix(".json"), json_text)
        return
    fmt = cfg.format or default
    emit(json_text if fmt == OutputFormatEnum.JSON else csv_text, None)

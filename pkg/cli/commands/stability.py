"""
stability — анализ абсолютной устойчивости f(z, C).

## Действия
- interval: I(C) = R_A(C) ∩ ℝ
- imag: пересечение R_A(C) с мнимой осью
- locus: точки линии |f| = 1 на сетке (CSV re, im); --region stable
  оставляет только границу R_A(C) с Re z ≤ 0
- constants: критические константы (z₁, C₁, z₂, C₂)
"""

import argparse

import numpy as np

from core.config import configs
from model.enums import LocusRegionEnum, OutputFormatEnum
from schema.config.run_config_schema import RunConfigSchema
from schema.stability.stability_schema import (
    ConstantsReportSchema,
    ImagReportSchema,
    IntervalReportSchema,
    LocusReportSchema,
)
from service.export.export_service import ExportService, csv_text, format_float
from service.stability import ImagAxisService, IntervalService, LocusService, StabilityFunctionService

from .options import add_output_options, emit


def register(subcommands) -> argparse.ArgumentParser:
    parser = subcommands.add_parser(
        "stability",
        help="анализ устойчивости",
        description="Интервал, мнимая ось, линия |f| = 1 и критические константы.",
    )
    parser.add_argument("action", choices=["interval", "imag", "locus", "constants"])
    parser.add_argument("--C", dest="c", type=float, help="константа C")
    parser.add_argument(
        "--region",
        choices=[r.value for r in LocusRegionEnum],
        help="locus: вся линия |f| = 1 (full) или граница R_A(C) с Re z ≤ 0 (stable)",
    )
    parser.add_argument("--re-min", dest="re_min", type=float)
    parser.add_argument("--re-max", dest="re_max", type=float)
    parser.add_argument("--im-min", dest="im_min", type=float)
    parser.add_argument("--im-max", dest="im_max", type=float)
    parser.add_argument("--nx", type=int)
    parser.add_argument("--ny", type=int)
    add_output_options(parser)
    parser.set_defaults(handler=cmd_stability)
    return parser


def _interval(cfg: RunConfigSchema, fmt: OutputFormatEnum) -> str:
    interval = IntervalService().stability_interval(cfg.c)
    if fmt == OutputFormatEnum.CSV:
        return csv_text(["lo", "hi"], ([format_float(lo), format_float(hi)] for lo, hi in interval.intervals))
    return IntervalReportSchema(c=cfg.c, case=interval.case, intervals=interval.as_lists()).to_json()


def _imag(cfg: RunConfigSchema, fmt: OutputFormatEnum) -> str:
    imag = ImagAxisService().imag_axis_intersection(cfg.c)
    if fmt == OutputFormatEnum.CSV:
        return csv_text(["kind", "zeta"], ([imag.kind.value, format_float(p)] for p in imag.signed_points()))
    return ImagReportSchema(
        c=cfg.c,
        kind=imag.kind,
        endpoints=list(imag.endpoints),
        points=imag.signed_points(),
    ).to_json()


def _constants(fmt: OutputFormatEnum) -> str:
    z1, c1, z2, c2 = IntervalService().critical_constants()
    if fmt == OutputFormatEnum.CSV:
        return csv_text(["z1", "C1", "z2", "C2"], [[format_float(v) for v in (z1, c1, z2, c2)]])
    return ConstantsReportSchema(z1=z1, c1=c1, z2=z2, c2=c2).to_json()


def _locus(cfg: RunConfigSchema, fmt: OutputFormatEnum) -> str:
    grid = cfg.grid.to_grid(configs.LOCUS_NX, configs.LOCUS_NY)
    locus = LocusService().boundary_locus(cfg.c, grid)
    if fmt == OutputFormatEnum.CSV:
        return ExportService.locus_to_csv(locus, cfg.region)
    points = locus.region_points(cfg.region)
    residual = np.abs(np.abs(StabilityFunctionService.f(cfg.c, points)) - 1.0)
    return LocusReportSchema(
        c=cfg.c,
        region=cfg.region,
        points=int(points.size),
        segments=len(locus.segments),
        rejected=locus.rejected,
        tolerance=locus.tolerance,
        max_residual=float(residual.max()) if points.size else 0.0,
        grid={
            "re_min": grid.re_min,
            "re_max": grid.re_max,
            "im_min": grid.im_min,
            "im_max": grid.im_max,
            "nx": grid.nx,
            "ny": grid.ny,
        },
    ).to_json()


def cmd_stability(cfg: RunConfigSchema) -> int:
    """Выполнить stability: locus по умолчанию пишется в CSV, остальное в JSON."""
    if cfg.action == "locus":
        text = _locus(cfg, cfg.format or OutputFormatEnum.CSV)
    elif cfg.action == "interval":
        text = _interval(cfg, cfg.format or OutputFormatEnum.JSON)
    elif cfg.action == "imag":
        text = _imag(cfg, cfg.format or OutputFormatEnum.JSON)
    else:
        text = _constants(cfg.format or OutputFormatEnum.JSON)
    emit(text, cfg.output)
    return 0

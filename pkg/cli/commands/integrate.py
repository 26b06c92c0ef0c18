"""
integrate — интегрирование одной задачи реестра.

## Бизнес-контекст
Пишет траекторию (t, компоненты u) в CSV или JSON.
При разносе траектория записывается до последнего конечного состояния
с маркером blow-up, процесс завершается с кодом 2.

## Входные данные
- --problem, --method, --C, --mode, --tau, --T, --t0, --output, --format
"""

import argparse
import logging

from core.exceptions import NumericalBlowUpError
from model.enums import MethodKindEnum, OutputFormatEnum
from schema.config.run_config_schema import RunConfigSchema
from service.experiment.problem_factory import build_problem
from service.experiment.report_service import variable_names
from service.export.export_service import ExportService
from service.integrator.integrate_service import IntegrateService

from .options import add_method_options, add_output_options, emit, method_spec

logger = logging.getLogger(__name__)


def register(subcommands) -> argparse.ArgumentParser:
    parser = subcommands.add_parser(
        "integrate",
        help="проинтегрировать задачу",
        description="Интегрирование задачи реестра с фиксированным шагом.",
    )
    parser.add_argument("--problem", help="exp-decay | stiff-linear | stiff-nonlinear | spring | lorenz")
    add_method_options(parser)
    parser.add_argument("--tau", type=float, help="шаг τ > 0")
    parser.add_argument("--T", dest="horizon", type=float, help="конец отрезка интегрирования")
    parser.add_argument("--t0", type=float, help="начало отрезка (по умолчанию 0)")
    add_output_options(parser)
    parser.set_defaults(handler=cmd_integrate)
    return parser


def cmd_integrate(cfg: RunConfigSchema) -> int:
    """
    Выполнить integrate.

    ## Обработка
    1. Задача из реестра; при t0 ≠ 0 начальное значение берётся из точного решения
    2. Интегрирование до T
    3. Запись траектории; разнос → NumericalBlowUpError после записи

    ## Выходные данные
    - 0 при успехе
    """
    setup = build_problem(cfg.problem)
    t0 = setup.t0 if cfg.t0 is None else cfg.t0
    t_end = setup.horizon if cfg.horizon is None else cfg.horizon
    u0 = setup.u0
    if t0 != setup.t0 and setup.problem.exact is not None:
        u0 = setup.problem.exact(t0)

    method = method_spec(cfg)
    traj = IntegrateService().integrate(setup.problem, u0, t0, t_end, cfg.tau, method, keep_records=False)

    variables = variable_names(setup.problem.dim)
    if cfg.format == OutputFormatEnum.JSON:
        c = None if cfg.method == MethodKindEnum.RK4 else cfg.c
        text = ExportService.trajectory_report(traj, setup.problem_id.value, variables, c).to_json()
    else:
        text = ExportService.trajectory_to_csv(traj, variables)
    emit(text, cfg.output)
    logger.info("integrate %s %s: %d шагов", setup.problem.name, method.tag, len(traj.states) - 1)

    if traj.blew_up:
        raise NumericalBlowUpError(
            traj.final.t,
            f"Решение разошлось на шаге {traj.blow_up_step} (τ={cfg.tau!r}, метод {method.tag})",
        )
    return 0

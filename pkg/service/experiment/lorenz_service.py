"""
LorenzService — ошибки на хаотической задаче Лоренца.

## Бизнес-контекст
Эталон — RK4 с τ = 0.001 на [0, 10] (кэшируется на диске).
Ошибки x, y, z отсчитываются в t = 1..10. При C ∈ {0, 1} и τ = 0.0625
двухстадийная схема разносит; это данные, а не ошибка.
"""

import logging
from typing import Optional

from model.enums import MethodKindEnum, ProblemIdEnum
from model.trajectory_model import MethodSpec, Trajectory
from model.weight_model import WeightPolicy
from schema.experiment.experiment_schema import ExperimentSpecSchema
from schema.report.report_schema import ErrorReportSchema
from service.experiment.problem_factory import build_problem
from service.experiment.reference_values import lorenz_reference
from service.experiment.report_service import ReportService, variable_names
from service.integrator.integrate_service import IntegrateService

logger = logging.getLogger(__name__)

LORENZ_SAMPLE_TIMES = [float(t) for t in range(1, 11)]


class LorenzService:
    """Прогон задачи Лоренца против эталона RK4."""

    def __init__(
        self,
        integrator: Optional[IntegrateService] = None,
        reports: Optional[ReportService] = None,
    ):
        self._integrator = integrator or IntegrateService()
        self._reports = reports or ReportService()

    def run(
        self,
        spec: ExperimentSpecSchema,
        tau: float,
        c: Optional[float] = None,
    ) -> tuple[ErrorReportSchema, Trajectory]:
        """
        Интегрировать задачу Лоренца и сравнить с эталоном.

        ## Входные данные
        - spec: метод и режим весов (C из spec используется, если c не задан)
        - tau: шаг
        - c: константа C двухстадийной схемы (None — метод из spec)

        ## Выходные данные
        - (ErrorReportSchema, Trajectory): ошибки в t = 1..10 и сама траектория
        """
        setup = build_problem(ProblemIdEnum.LORENZ, spec.overrides)
        t_end = spec.horizon or setup.horizon
        sample_times = spec.sample_times or [t for t in LORENZ_SAMPLE_TIMES if t <= t_end + 1e-12]

        if c is not None:
            method = MethodSpec.two_stage(WeightPolicy(c=c, mode=spec.mode))
        else:
            method = spec.method_spec
            c = None if spec.method == MethodKindEnum.RK4 else spec.c
        method_name = method.kind.value

        traj = self._integrator.integrate(setup.problem, setup.u0, setup.t0, t_end, tau, method, keep_records=False)
        reference = None if spec.overrides else (lambda t: lorenz_reference(method_name, c, tau, t))
        rows = self._reports.error_rows(setup, traj, sample_times, reference=reference)
        if traj.blew_up:
            logger.warning("Лоренц %s τ=%r: разнос на шаге %s", method.tag, tau, traj.blow_up_step)
        else:
            logger.info("Лоренц %s τ=%r: %d отсчётов", method.tag, tau, len(rows))

        report = ErrorReportSchema(
            experiment=setup.problem_id.value,
            method=method.tag,
            c=c,
            tau=tau,
            reference_kind=setup.reference,
            variables=variable_names(setup.problem.dim),
            rows=rows,
        )
        return report, traj

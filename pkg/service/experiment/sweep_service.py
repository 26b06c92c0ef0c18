"""
SweepService — свипы устойчивости на жёстких задачах.

## Бизнес-контекст
Шаг τ сравнивается с интервалом абсолютной устойчивости через
z = τ·sup|L_u|, где супремум берётся вдоль точного (или эталонного)
решения; для систем используется спектральный радиус якобиана.
Классификация роста ошибки — classify_growth из error_metrics.
"""

import logging
from typing import Optional, Sequence

import numpy as np

from core.config import configs
from core.exceptions import ValidationError
from model.enums import MethodKindEnum, ProblemIdEnum
from model.problem_model import ScalarProblem
from model.trajectory_model import Trajectory
from schema.experiment.experiment_schema import ExperimentSpecSchema
from schema.report.report_schema import ErrorReportSchema, SweepEntrySchema, SweepReportSchema
from service.experiment.error_metrics import classify_growth
from service.experiment.problem_factory import ProblemSetup, build_problem
from service.experiment.reference_service import ReferenceService
from service.experiment.report_service import ReportService, variable_names
from service.integrator.integrate_service import IntegrateService
from service.stability.interval_service import IntervalService

logger = logging.getLogger(__name__)

SWEEP_PROBLEMS = (ProblemIdEnum.STIFF_LINEAR, ProblemIdEnum.STIFF_NONLINEAR)
STIFFNESS_SAMPLES = 4001


def _default_sample_times(setup: ProblemSetup, t_end: float) -> list[float]:
    n = max(int(np.floor(t_end - setup.t0)), 1)
    return list(np.linspace(setup.t0, t_end, n + 1)[1:])


def _check_problem(spec: ExperimentSpecSchema) -> None:
    if spec.problem_id not in SWEEP_PROBLEMS:
        raise ValidationError(
            "--experiment: свип устойчивости только для stiff-linear или stiff-nonlinear, "
            f"получено '{spec.problem_id.value}'"
        )


class SweepService:
    """Свип по τ, классификация роста и порог дивергенции."""

    def __init__(
        self,
        integrator: Optional[IntegrateService] = None,
        references: Optional[ReferenceService] = None,
        reports: Optional[ReportService] = None,
        intervals: Optional[IntervalService] = None,
    ):
        self._integrator = integrator or IntegrateService()
        self._references = references or ReferenceService()
        self._reports = reports or ReportService(self._references)
        self._intervals = intervals or IntervalService()

    def stiffness_bound(self, spec: ExperimentSpecSchema) -> float:
        """
        sup|L_u| вдоль решения на [t0, T].

        ## Выходные данные
        - |L_u| для скалярных задач, спектральный радиус якобиана для систем
        """
        setup = build_problem(spec.problem_id, spec.overrides)
        t_end = spec.horizon or setup.horizon
        times = np.linspace(setup.t0, t_end, STIFFNESS_SAMPLES)
        if setup.problem.exact is None:
            times = setup.t0 + 0.001 * np.arange(int(round((t_end - setup.t0) / 0.001)) + 1)
        values = self._references.exact_values(setup, list(times))

        problem = setup.problem
        if isinstance(problem, ScalarProblem):
            bound = max(abs(float(problem.rhs_u(t, row[0]))) for t, row in zip(times, values))
        else:
            bound = max(
                float(np.max(np.abs(np.linalg.eigvals(problem.jacobian(t, row))))) for t, row in zip(times, values)
            )
        logger.debug("sup|L_u| для %s: %r", problem.name, bound)
        return bound

    def left_endpoint(self, spec: ExperimentSpecSchema) -> float:
        """Левый конец I(C); RK4 имеет ту же функцию устойчивости, что и C = 0."""
        c = 0.0 if spec.method == MethodKindEnum.RK4 else spec.c
        return self._intervals.stability_interval(c).left_endpoint

    def edge_tau(self, spec: ExperimentSpecSchema) -> float:
        """τ* = |левый конец I(C)| / sup|L_u|."""
        return abs(self.left_endpoint(spec)) / self.stiffness_bound(spec)

    def classify_tau(
        self,
        setup: ProblemSetup,
        spec: ExperimentSpecSchema,
        tau: float,
        t_end: float,
        accumulate_time: bool = False,
    ) -> tuple[Trajectory, Optional[float], bool]:
        """Интегрировать с шагом τ и классифицировать рост ошибки: (траектория, наклон, дивергенция)."""
        traj = self._integrator.integrate(
            setup.problem,
            setup.u0,
            setup.t0,
            t_end,
            tau,
            spec.method_spec,
            keep_records=False,
            accumulate_time=accumulate_time,
        )
        times, series = self._reports.series_errors(setup, traj)
        slope, divergent = classify_growth(times, series, traj.blew_up)
        return traj, slope, divergent

    def run(self, spec: ExperimentSpecSchema, taus: Sequence[float]) -> SweepReportSchema:
        """
        Свип по шагам τ.

        ## Входные данные
        - spec: stiff-linear или stiff-nonlinear, метод, горизонт, моменты отсчёта
        - taus: шаги (явный параметр, а не значения с рисунков)

        ## Выходные данные
        - SweepReportSchema: на каждый τ значение z = τ·sup|L_u|, наклон,
          признак дивергенции и временной ряд ошибок

        ## Исключения
        - ValidationError: задача не жёсткая или список шагов пуст
        """
        _check_problem(spec)
        if not taus:
            raise ValidationError("--tau: нужен хотя бы один шаг (at least one step is required)")
        setup = build_problem(spec.problem_id, spec.overrides)
        t_end = spec.horizon or setup.horizon
        sample_times = spec.sample_times or _default_sample_times(setup, t_end)
        stiffness = self.stiffness_bound(spec)
        method = spec.method_spec
        c = None if spec.method == MethodKindEnum.RK4 else spec.c

        entries = []
        for tau in taus:
            if not tau > 0.0:
                raise ValidationError(f"--tau: шаг должен быть положительным (tau must be positive), получено {tau!r}")
            traj, slope, divergent = self.classify_tau(setup, spec, tau, t_end)
            report = ErrorReportSchema(
                experiment=setup.problem_id.value,
                method=method.tag,
                c=c,
                tau=tau,
                reference_kind=setup.reference,
                variables=variable_names(setup.problem.dim),
                rows=self._reports.error_rows(setup, traj, sample_times),
            )
            entries.append(
                SweepEntrySchema(
                    tau=tau,
                    z=-tau * stiffness,
                    slope=slope,
                    blew_up=traj.blew_up,
                    divergent=divergent,
                    report=report,
                )
            )
            logger.info("Свип %s τ=%r: наклон=%s, дивергенция=%s", setup.problem.name, tau, slope, divergent)

        return SweepReportSchema(
            experiment=setup.problem_id.value,
            method=method.tag,
            c=c,
            stiffness=stiffness,
            left_endpoint=self.left_endpoint(spec),
            entries=entries,
        )

    def find_divergence_threshold(
        self,
        spec: ExperimentSpecSchema,
        tau_lo: float,
        tau_hi: float,
        rtol: float = 1e-4,
    ) -> float:
        """
        Порог дивергенции по τ бисекцией классификации.

        ## Входные данные
        - tau_lo: шаг, классифицируемый как устойчивый
        - tau_hi: шаг, классифицируемый как дивергентный
        - rtol: относительная ширина итогового отрезка

        ## Выходные данные
        - середина итогового отрезка [устойчивый, дивергентный]

        ## Исключения
        - ValidationError: концы не разделяют классы
        """
        _check_problem(spec)
        if not 0.0 < tau_lo < tau_hi:
            raise ValidationError("--tau: нужно 0 < tau_lo < tau_hi")
        setup = build_problem(spec.problem_id, spec.overrides)
        t_end = spec.horizon or setup.horizon

        if self.classify_tau(setup, spec, tau_lo, t_end)[2]:
            raise ValidationError(f"Шаг tau_lo={tau_lo!r} уже дивергентен")
        if not self.classify_tau(setup, spec, tau_hi, t_end)[2]:
            raise ValidationError(f"Шаг tau_hi={tau_hi!r} устойчив")

        lo, hi = tau_lo, tau_hi
        while (hi - lo) > rtol * hi:
            mid = 0.5 * (lo + hi)
            if self.classify_tau(setup, spec, mid, t_end)[2]:
                hi = mid
            else:
                lo = mid
        threshold = 0.5 * (lo + hi)
        logger.info(
            "Порог дивергенции %s (%s): τ=%r, порог наклона %r",
            setup.problem.name,
            spec.method_spec.tag,
            threshold,
            configs.GROWTH_SLOPE_THRESHOLD,
        )
        return threshold

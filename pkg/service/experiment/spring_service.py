"""
SpringService — пружинный осциллятор 2×2.

## Бизнес-контекст
Линейная жёсткая система с собственными числами −1 и −1000.
Ошибки err(p), err(q) записываются в t = 2, 4, …, 16. Опубликованная
таблица снята с шагом τ = 2/1437 (1437 шагов до t = 2) и часами,
которые ведутся суммой t ← t + τ: на таком шаге ошибка определяется
дрейфом часов и погрешностью (1 − C)τ⁴t/120, поэтому табличный
прогон идёт в режиме accumulate_time.
Двухстадийная схема здесь использует матричный вес α(τJ).

## Наибольший устойчивый шаг
Шаг на краю I(C) оставляет |f(τλ₂)| ≈ 1: ошибка округления в жёсткой
моде затухает медленнее e^{−t} и растёт относительно решения.
aligned_stable_tau берёт наибольший шаг 2/N внутри I(C), кратный
отсчётам, на котором жёсткая мода уже заметно затухает.
"""

import logging
import math
from typing import Optional, Sequence

from model.enums import MethodKindEnum, ProblemIdEnum
from schema.experiment.experiment_schema import ExperimentSpecSchema
from schema.report.report_schema import ErrorReportSchema
from service.experiment.error_metrics import classify_growth
from service.experiment.problem_factory import build_problem
from service.experiment.reference_values import SPRING_STEPS_PER_TWO, spring_reference
from service.experiment.report_service import ReportService, variable_names
from service.experiment.sweep_service import SweepService
from service.integrator.integrate_service import IntegrateService

logger = logging.getLogger(__name__)

SPRING_SAMPLE_TIMES = [2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0]
SAMPLE_SPACING = 2.0


def table_tau() -> float:
    return SAMPLE_SPACING / SPRING_STEPS_PER_TWO


def _spec_for_spring(spec: ExperimentSpecSchema) -> ExperimentSpecSchema:
    if spec.problem_id == ProblemIdEnum.SPRING:
        return spec
    return spec.model_copy(update={"problem_id": ProblemIdEnum.SPRING})


class SpringService:
    """Ошибки и рост ошибки на пружинном осцилляторе."""

    def __init__(
        self,
        integrator: Optional[IntegrateService] = None,
        reports: Optional[ReportService] = None,
        sweeps: Optional[SweepService] = None,
    ):
        self._integrator = integrator or IntegrateService()
        self._reports = reports or ReportService()
        self._sweeps = sweeps or SweepService(integrator=self._integrator, reports=self._reports)

    def biggest_stable_tau(self, spec: ExperimentSpecSchema) -> float:
        """Наибольший шаг с τ·ρ(A) внутри I(C): |левый конец| с отсечением до трёх знаков / ρ(A)."""
        spec = _spec_for_spring(spec)
        z = math.floor(abs(self._sweeps.left_endpoint(spec)) * 1000.0) / 1000.0
        return z / self._sweeps.stiffness_bound(spec)

    def aligned_stable_tau(self, spec: ExperimentSpecSchema) -> float:
        """Наибольший шаг 2/N с N = ⌈2ρ(A)/|левый конец I(C)|⌉."""
        spec = _spec_for_spring(spec)
        rho = self._sweeps.stiffness_bound(spec)
        n = math.ceil(SAMPLE_SPACING * rho / abs(self._sweeps.left_endpoint(spec)))
        return SAMPLE_SPACING / n

    def run(self, spec: ExperimentSpecSchema, taus: Optional[Sequence[float]] = None) -> ErrorReportSchema:
        """
        Ошибки пружинного осциллятора для набора шагов.

        ## Входные данные
        - spec: метод (двухстадийный с C или RK4), горизонт, моменты отсчёта
        - taus: шаги; по умолчанию табличный τ = 2/1437

        ## Выходные данные
        - ErrorReportSchema: строки (t, τ) c err(p), err(q); для табличного
          шага добавлены опубликованные значения и отклонение
        """
        spec = _spec_for_spring(spec)
        setup = build_problem(ProblemIdEnum.SPRING, spec.overrides)
        t_end = spec.horizon or setup.horizon
        sample_times = spec.sample_times or [t for t in SPRING_SAMPLE_TIMES if t <= t_end + 1e-12]
        taus = list(taus) if taus else [table_tau()]
        method = spec.method_spec
        two_stage = spec.method == MethodKindEnum.TWO_STAGE

        rows = []
        for tau in taus:
            published = two_stage and not spec.overrides and math.isclose(tau, table_tau())
            traj = self._integrator.integrate(
                setup.problem,
                setup.u0,
                setup.t0,
                t_end,
                tau,
                method,
                keep_records=False,
                accumulate_time=published,
            )
            reference = (lambda t: spring_reference(spec.c, t)) if published else None
            rows.extend(self._reports.error_rows(setup, traj, sample_times, reference=reference))
            logger.info("Пружина %s τ=%r: разнос=%s", method.tag, tau, traj.blew_up)

        return ErrorReportSchema(
            experiment=setup.problem_id.value,
            method=method.tag,
            c=spec.c if two_stage else None,
            tau=taus[0] if len(taus) == 1 else None,
            reference_kind=setup.reference,
            variables=variable_names(setup.problem.dim),
            rows=rows,
        )

    def growth(self, spec: ExperimentSpecSchema, tau: float) -> tuple[Optional[float], bool]:
        """Наклон огибающей log10(err) и признак дивергенции на пружине с шагом τ."""
        spec = _spec_for_spring(spec)
        setup = build_problem(ProblemIdEnum.SPRING, spec.overrides)
        t_end = spec.horizon or setup.horizon
        traj = self._integrator.integrate(
            setup.problem, setup.u0, setup.t0, t_end, tau, spec.method_spec, keep_records=False
        )
        times, series = self._reports.series_errors(setup, traj)
        return classify_growth(times, series, traj.blew_up)

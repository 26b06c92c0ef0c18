"""
BenchService — пакетный прогон ячеек (C, τ) одного эксперимента.

## Бизнес-контекст
Ячейки независимы и могут считаться в пуле процессов; результат
собирается в порядке входа, поэтому не зависит от числа процессов.
Для каждого метода дополнительно считается число вычислений rhs,
rhs_t, rhs_u и D_t L за один шаг.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from model.enums import ProblemIdEnum
from schema.experiment.experiment_schema import ExperimentSpecSchema
from schema.report.report_schema import BenchReportSchema, SweepEntrySchema
from service.experiment.convergence_service import ConvergenceService
from service.experiment.lorenz_service import LorenzService
from service.experiment.problem_factory import build_problem
from service.experiment.reference_values import LORENZ_TABLES, method_key
from service.experiment.report_service import ReportService
from service.experiment.spring_service import SpringService, table_tau
from service.experiment.sweep_service import SweepService
from service.integrator.integrate_service import IntegrateService
from service.ode.evaluation_counter import EvaluationCounter

logger = logging.getLogger(__name__)

# множители τ* = |левый конец I(C)| / sup|L_u| для свипа по умолчанию
SWEEP_FACTORS = (0.98, 1.02)

Cell = tuple[ExperimentSpecSchema, Optional[float]]


def run_cell(cell: Cell) -> SweepEntrySchema:
    """Одна ячейка (спецификация, τ); функция модуля, чтобы её можно было передать в пул."""
    return BenchService().run_cell(cell)


class BenchService:
    """Ячейки specs × taus последовательно или в пуле процессов."""

    def __init__(
        self,
        integrator: Optional[IntegrateService] = None,
        reports: Optional[ReportService] = None,
    ):
        self._integrator = integrator or IntegrateService()
        self._reports = reports or ReportService()
        self._convergence = ConvergenceService(self._integrator, self._reports)
        self._sweeps = SweepService(integrator=self._integrator, reports=self._reports)
        self._spring = SpringService(self._integrator, self._reports, self._sweeps)
        self._lorenz = LorenzService(self._integrator, self._reports)

    def default_taus(self, spec: ExperimentSpecSchema) -> list[Optional[float]]:
        """Шаги по умолчанию для ячейки с данным методом."""
        pid = spec.problem_id
        if pid == ProblemIdEnum.EXP_DECAY:
            return [None]
        if pid in (ProblemIdEnum.STIFF_LINEAR, ProblemIdEnum.STIFF_NONLINEAR):
            edge = self._sweeps.edge_tau(spec)
            return [f * edge for f in SWEEP_FACTORS]
        if pid == ProblemIdEnum.SPRING:
            return [table_tau(), self._spring.biggest_stable_tau(spec), self._spring.aligned_stable_tau(spec)]
        key = method_key(spec.method.value, spec.c)
        taus = sorted((tau for k, tau in LORENZ_TABLES if k == key), reverse=True)
        return taus or [0.01]

    def table_taus(self, spec: ExperimentSpecSchema) -> list[Optional[float]]:
        """Только шаги, для которых есть опубликованные значения."""
        if spec.problem_id == ProblemIdEnum.SPRING:
            return [table_tau()]
        if spec.problem_id == ProblemIdEnum.LORENZ:
            return self.default_taus(spec)
        return [None]

    def run_cell(self, cell: Cell) -> SweepEntrySchema:
        spec, tau = cell
        pid = spec.problem_id
        if pid == ProblemIdEnum.EXP_DECAY:
            report = self._convergence.run(spec.model_copy(update={"tau0": tau}) if tau is not None else spec)
            divergent = any(r.divergent for r in report.rows)
            return SweepEntrySchema(tau=report.tau, divergent=divergent, blew_up=divergent, report=report)
        if pid in (ProblemIdEnum.STIFF_LINEAR, ProblemIdEnum.STIFF_NONLINEAR):
            return self._sweeps.run(spec, [tau]).entries[0]
        if pid == ProblemIdEnum.SPRING:
            report = self._spring.run(spec, [tau])
            slope, divergent = self._spring.growth(spec, tau)
            return SweepEntrySchema(
                tau=tau,
                slope=slope,
                blew_up=any(r.divergent for r in report.rows),
                divergent=divergent,
                report=report,
            )
        report, traj = self._lorenz.run(spec, tau)
        return SweepEntrySchema(tau=tau, blew_up=traj.blew_up, divergent=traj.blew_up, report=report)

    def evaluation_profile(self, spec: ExperimentSpecSchema, tau: float) -> dict[str, int]:
        """Число вызовов функций задачи за один шаг метода."""
        setup = build_problem(spec.problem_id, spec.overrides)
        counter = EvaluationCounter(setup.problem)
        self._integrator.integrate(
            counter.problem, setup.u0, setup.t0, setup.t0 + tau, tau, spec.method_spec, keep_records=False
        )
        return counter.snapshot()

    def run(
        self,
        specs: Sequence[ExperimentSpecSchema],
        taus: Optional[Sequence[float]] = None,
        jobs: int = 1,
    ) -> BenchReportSchema:
        """
        Прогнать ячейки specs × taus.

        ## Входные данные
        - specs: спецификации одного эксперимента (разные C или метод)
        - taus: шаги; по умолчанию свои для каждой спецификации
        - jobs: число процессов (1 — без пула)

        ## Выходные данные
        - BenchReportSchema с ячейками в порядке входа
        """
        cells: list[Cell] = [
            (spec, tau) for spec in specs for tau in (list(taus) if taus else self.default_taus(spec))
        ]
        logger.info("Bench %s: %d ячеек, процессов %d", specs[0].problem_id.value, len(cells), jobs)
        if jobs > 1 and len(cells) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                entries = list(pool.map(run_cell, cells))
        else:
            entries = [self.run_cell(cell) for cell in cells]

        evaluations = {}
        for spec in specs:
            tag = spec.method_spec.tag
            if tag not in evaluations:
                evaluations[tag] = self.evaluation_profile(spec, 0.01)

        return BenchReportSchema(
            experiment=specs[0].problem_id.value,
            jobs=jobs,
            entries=entries,
            evaluations=evaluations,
        )

"""
ConvergenceService — таблица ошибок и порядков при делении шага пополам.

## Бизнес-контекст
Шаги τ0/2^k, k = 0..levels−1; ошибка в конце горизонта T.
Опорный шаг τ0 по умолчанию берётся из опубликованной таблицы для
exp-decay (2.7 при C = 0, 5.8 при C = 0.5, 3.2 при C = 1).
"""

import logging
from typing import Optional

from core.exceptions import ValidationError
from model.enums import MethodKindEnum, ProblemIdEnum
from schema.experiment.experiment_schema import ExperimentSpecSchema
from schema.report.report_schema import ErrorReportSchema
from service.experiment.error_metrics import observed_order
from service.experiment.problem_factory import build_problem
from service.experiment.reference_values import CONVERGENCE_TABLE, convergence_reference
from service.experiment.report_service import ReportService, variable_names
from service.integrator.integrate_service import IntegrateService

logger = logging.getLogger(__name__)


class ConvergenceService:
    """Таблица сходимости по уровням τ0/2^k."""

    def __init__(
        self,
        integrator: Optional[IntegrateService] = None,
        reports: Optional[ReportService] = None,
    ):
        self._integrator = integrator or IntegrateService()
        self._reports = reports or ReportService()

    @staticmethod
    def default_tau0(spec: ExperimentSpecSchema) -> float:
        """Опорный шаг τ0: явный или из таблицы сходимости exp-decay."""
        if spec.tau0 is not None:
            return spec.tau0
        if spec.problem_id == ProblemIdEnum.EXP_DECAY and spec.c in CONVERGENCE_TABLE:
            return CONVERGENCE_TABLE[spec.c][0]
        raise ValidationError("--tau0: опорный шаг обязателен для этой задачи (reference step is required)")

    def run(self, spec: ExperimentSpecSchema) -> ErrorReportSchema:
        """
        Построить таблицу сходимости.

        ## Входные данные
        - spec: задача, метод, tau0 (необязателен для exp-decay), levels, horizon

        ## Обработка
        1. Для каждого уровня k интегрировать с τ = τ0/2^k до T
        2. Относительная ошибка в T по каждой переменной
        3. Порядок log2(err_{k−1}/err_k), для k = 0 пусто
        4. Разнос записывается строкой с divergent = true

        ## Выходные данные
        - ErrorReportSchema со строкой на каждый уровень
        """
        setup = build_problem(spec.problem_id, spec.overrides)
        t_end = spec.horizon or setup.horizon
        tau0 = self.default_tau0(spec)
        method = spec.method_spec
        published = (
            spec.method == MethodKindEnum.TWO_STAGE
            and spec.problem_id == ProblemIdEnum.EXP_DECAY
            and not spec.overrides
            and spec.horizon in (None, setup.horizon)
        )

        rows = []
        previous = None
        for level in range(spec.levels):
            tau = tau0 / 2**level
            traj = self._integrator.integrate(setup.problem, setup.u0, setup.t0, t_end, tau, method, keep_records=False)
            reference = convergence_reference(spec.c, tau0, level) if published else None
            row = self._reports.error_rows(
                setup,
                traj,
                [t_end],
                reference=(lambda t, ref=reference: (ref[0],) if ref is not None else None),
            )[0]
            if previous is not None:
                row.order = [observed_order(p, e) for p, e in zip(previous, row.errors)]
            previous = row.errors
            rows.append(row)
            logger.debug("Уровень %d: τ=%r, ошибки=%s", level, tau, row.errors)

        logger.info("Сходимость %s %s: %d уровней, τ0=%r", setup.problem.name, method.tag, len(rows), tau0)
        return ErrorReportSchema(
            experiment=setup.problem_id.value,
            method=method.tag,
            c=None if spec.method == MethodKindEnum.RK4 else spec.c,
            tau=tau0,
            reference_kind=setup.reference,
            variables=variable_names(setup.problem.dim),
            rows=rows,
        )

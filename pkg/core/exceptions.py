"""
Exceptions — базовые исключения приложения.

## Бизнес-контекст
Иерархия исключений для численных и конфигурационных ошибок.
Преобразуются в коды завершения процесса через exception handlers CLI.
"""

from typing import Any


class AppException(Exception):
    """Базовое исключение приложения."""

    def __init__(self, message: str, code: str = "UNKNOWN_ERROR"):
        self.message = message
        self.code = code
        super().__init__(message)


class NotFoundError(AppException):
    """Ресурс не найден."""

    def __init__(self, resource: str, key: str):
        super().__init__(
            message=f"{resource} '{key}' не найден",
            code="NOT_FOUND",
        )


class UnknownProblemError(NotFoundError):
    """Задача отсутствует в реестре."""

    def __init__(self, problem_id: str):
        super().__init__(resource="Problem", key=problem_id)


class ValidationError(AppException):
    """Ошибка валидации."""

    def __init__(self, message: str):
        super().__init__(message=message, code="VALIDATION_ERROR")


class InvalidStateError(ValidationError):
    """Состояние содержит NaN или Inf."""

    def __init__(self, t: float, u: Any):
        super().__init__(f"Состояние не конечно: t={t!r}, u={u!r}")
        self.t = t
        self.u = u


class ContractViolationError(AppException):
    """Нарушен контракт размерностей."""

    def __init__(self, message: str):
        super().__init__(message=message, code="CONTRACT_VIOLATION")


class EvaluationError(AppException):
    """Неконечный результат вычисления D_t L."""

    def __init__(self, t: float, u: Any):
        super().__init__(
            message=f"D_t L не конечна в точке (t={t!r}, u={u!r})",
            code="EVALUATION_ERROR",
        )
        self.t = t
        self.u = u


class NumericalBlowUpError(AppException):
    """Численное решение разошлось (неконечно или выше порога переполнения)."""

    def __init__(self, t: float, message: str = ""):
        super().__init__(
            message=message or f"Решение разошлось при t={t!r}",
            code="NUMERICAL_BLOW_UP",
        )
        self.t = t


class WeightDegeneracyError(AppException):
    """Вес β слишком близок к нулю."""

    def __init__(
        self,
        t: float,
        u: Any,
        tau: float,
        c: float,
        beta: float,
        step_index: int | None = None,
    ):
        where = f", шаг {step_index}" if step_index is not None else ""
        super().__init__(
            message=(
                f"Вырожденный вес beta={beta!r} (t={t!r}, u={u!r}, "
                f"tau={tau!r}, C={c!r}{where})"
            ),
            code="WEIGHT_DEGENERACY",
        )
        self.t = t
        self.u = u
        self.tau = tau
        self.c = c
        self.beta = beta
        self.step_index = step_index

    def at_step(self, step_index: int) -> "WeightDegeneracyError":
        """Та же ошибка с номером шага."""
        return WeightDegeneracyError(
            self.t, self.u, self.tau, self.c, self.beta, step_index
        )


class UnsupportedModeError(AppException):
    """Режим весов не поддерживается для данной формы задачи."""

    def __init__(self, mode: str, form: str):
        super().__init__(
            message=f"Режим весов '{mode}' не поддерживается для формы '{form}'",
            code="UNSUPPORTED_MODE",
        )


class CaseClassificationError(AppException):
    """Не найден отрезок локализации корня для случая C."""

    def __init__(self, c: float, detail: str):
        super().__init__(
            message=f"Классификация C={c!r} не удалась: {detail}",
            code="CASE_CLASSIFICATION",
        )


class InternalConsistencyError(AppException):
    """Нарушена внутренняя согласованность вычислений."""

    def __init__(self, message: str):
        super().__init__(message=message, code="INTERNAL_CONSISTENCY")


class StorageError(AppException):
    """Ошибка дискового кэша эталонных траекторий."""

    def __init__(self, message: str):
        super().__init__(
            message=f"Ошибка кэша: {message}",
            code="STORAGE_ERROR",
        )

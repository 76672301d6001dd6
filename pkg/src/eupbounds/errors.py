"""Exception hierarchy shared by all eupbounds modules."""

from __future__ import annotations


class EupError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(EupError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class CoefficientError(DomainError):
    """A Sturm-Liouville coefficient was sampled non-positive.

    Carries the offending coordinate in ``coordinate``.
    """

    def __init__(self, message: str, coordinate: float):
        super().__init__(message)
        self.coordinate = coordinate


class ConvergenceError(EupError, RuntimeError):
    """A series or iteration hit its term cap before converging.

    ``partial_sum`` and ``last_term`` record the state at abort.
    """

    def __init__(self, message: str, partial_sum: float, last_term: float):
        super().__init__(message)
        self.partial_sum = partial_sum
        self.last_term = last_term


class RootNotFoundError(EupError, RuntimeError):
    """A root scan exhausted its search range without a sign change."""


class QuadratureError(EupError, RuntimeError):
    """Adaptive quadrature could not reach the requested tolerance.

    ``achieved`` is the error estimate of the offending panel.
    """

    def __init__(self, message: str, achieved: float):
        super().__init__(message)
        self.achieved = achieved

"""relcorr Correlation Engine

Dispatches a correlation request to a closed form or to the oracle.

Closed forms exist for
  - spin 1/2, Newton-Wigner and Czachor, any momenta;
  - spin 1, Czachor, any momenta;
  - spin 1, Newton-Wigner, c.m. frame only (p = k^pi).
The oracle covers every combination.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Union

import numpy as np

from ..common.settings import DEFAULT_SETTINGS
from ..kinematics.momenta import Z_AXIS, is_cm_pair
from ..kinematics.spin_matrices import Spin
from ..kinematics.vectors import Direction, Momentum
from ..observables.spin_observables import SpinOperator
from .closed_forms import corr_cz_half, corr_cz_one, corr_nw_half, corr_nw_one_cm
from .errors import ClosedFormUnavailableError, CorrelationError
from .oracle import oracle_correlation


class Backend(Enum):
    CLOSED = "closed"
    ORACLE = "oracle"


def cm_parameters(k: Momentum, p: Momentum) -> tuple:
    """(x, n) of a c.m. pair; n defaults to +z at rest."""
    size = float(np.linalg.norm(k.spatial))
    x = size * size / (k.mass * k.mass)
    n = Direction.normalized(k.spatial) if size > 0 else Z_AXIS
    return x, n


def closed_form_available(spin: Spin, operator: SpinOperator, k: Momentum, p: Momentum,
                          cm_tolerance: float = DEFAULT_SETTINGS.cm_tolerance) -> bool:
    if spin is Spin.ONE and operator is SpinOperator.NEWTON_WIGNER:
        return is_cm_pair(k, p, cm_tolerance)
    return True


def closed_form(spin: Spin, operator: SpinOperator, k: Momentum, p: Momentum,
                a: Direction, b: Direction) -> float:
    if spin is Spin.HALF:
        if operator is SpinOperator.NEWTON_WIGNER:
            return corr_nw_half(k, p, a, b)
        return corr_cz_half(k, p, a, b)

    if operator is SpinOperator.CZACHOR:
        return corr_cz_one(k, p, a, b)
    if not closed_form_available(spin, operator, k, p):
        raise ClosedFormUnavailableError(spin, operator)
    x, n = cm_parameters(k, p)
    return corr_nw_one_cm(x, n, a, b)


@dataclass(frozen=True)
class CorrelationSpec:
    """One fully specified correlation value."""
    spin: Spin
    operator: SpinOperator
    backend: Backend
    k: Momentum
    p: Momentum
    a: Direction
    b: Direction

    def evaluate(self) -> float:
        return CorrelationFunction(self.spin, self.operator, self.backend, self.k, self.p)(self.a, self.b)


@dataclass(frozen=True)
class CorrelationFunction:
    """C(a, b) for fixed spin, operator, backend and momenta.

    This is the correlation functional the inequality and scan modules
    consume.
    """
    spin: Spin
    operator: SpinOperator
    backend: Backend
    k: Momentum
    p: Momentum

    def __post_init__(self):
        if self.backend is Backend.CLOSED and not closed_form_available(
                self.spin, self.operator, self.k, self.p):
            raise ClosedFormUnavailableError(self.spin, self.operator)

    def __call__(self, a: Direction, b: Direction) -> float:
        if self.backend is Backend.CLOSED:
            value = closed_form(self.spin, self.operator, self.k, self.p, a, b)
        else:
            value = oracle_correlation(self.spin, self.operator, self.k, self.p, a, b)
        if not math.isfinite(value):
            raise CorrelationError(f"non-finite correlation {value!r}")
        return value


def correlation_function(spin: Union[Spin, str, float],
                         operator: Union[SpinOperator, str],
                         backend: Union[Backend, str],
                         k: Momentum, p: Momentum) -> CorrelationFunction:
    """Build a :class:`CorrelationFunction` from enum members or their string values."""
    return CorrelationFunction(
        Spin.parse(spin),
        SpinOperator(operator) if isinstance(operator, str) else operator,
        Backend(backend) if isinstance(backend, str) else backend,
        k, p)

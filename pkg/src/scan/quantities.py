"""relcorr Scan Quantities

Binds a physical configuration (spin, operator, backend, momenta family,
c.m. axis, mass) to one-variable functions of x, the form in which the
sweep, extremum and optimisation routines consume them.
"""

import logging
from dataclasses import dataclass, replace
from typing import Callable, Dict, Sequence, Union

from ..common.settings import DEFAULT_SETTINGS
from ..correlation.engine import Backend, CorrelationFunction, closed_form_available
from ..inequalities.bell import InequalityKind, InequalityResult, evaluate_inequality
from ..kinematics.momenta import Z_AXIS, MomentaFamily, pair_momenta
from ..kinematics.spin_matrices import Spin
from ..kinematics.vectors import Direction
from ..observables.spin_observables import SpinOperator


logger = logging.getLogger(__name__)

Quantity = Callable[[float], float]


@dataclass(frozen=True)
class QuantityConfig:
    """Everything but x and the measurement directions."""
    spin: Spin
    operator: SpinOperator
    backend: Backend = Backend.CLOSED
    family: MomentaFamily = MomentaFamily.CM
    n: Direction = Z_AXIS
    mass: float = DEFAULT_SETTINGS.default_mass
    # fall back to the oracle where no closed form exists instead of raising
    fallback: bool = False

    @classmethod
    def create(cls, spin: Union[Spin, str, float], operator: Union[SpinOperator, str],
               backend: Union[Backend, str] = Backend.CLOSED,
               family: Union[MomentaFamily, str] = MomentaFamily.CM,
               n: Direction = Z_AXIS,
               mass: float = DEFAULT_SETTINGS.default_mass,
               fallback: bool = False) -> 'QuantityConfig':
        return cls(
            Spin.parse(spin),
            SpinOperator(operator) if isinstance(operator, str) else operator,
            Backend(backend) if isinstance(backend, str) else backend,
            MomentaFamily(family) if isinstance(family, str) else family,
            n, float(mass), fallback)

    def with_operator(self, operator: SpinOperator) -> 'QuantityConfig':
        return replace(self, operator=operator)

    def effective_backend(self) -> Backend:
        """Backend actually used; only differs from ``backend`` when falling back."""
        if self.backend is Backend.CLOSED and self.fallback and not self._closed_possible():
            return Backend.ORACLE
        return self.backend

    def _closed_possible(self) -> bool:
        # spin-1 NW has a closed form only in the c.m. frame, whatever x is
        return not (self.spin is Spin.ONE and self.operator is SpinOperator.NEWTON_WIGNER
                    and self.family is not MomentaFamily.CM)

    def correlation_at(self, x: float) -> CorrelationFunction:
        k, p = pair_momenta(self.family, x, self.mass, self.n)
        backend = self.backend
        if (backend is Backend.CLOSED and self.fallback
                and not closed_form_available(self.spin, self.operator, k, p)):
            logger.debug("no closed form for spin-%s %s at x=%g, using the oracle",
                         self.spin.value, self.operator.value, x)
            backend = Backend.ORACLE
        return CorrelationFunction(self.spin, self.operator, backend, k, p)

    def describe(self) -> Dict[str, object]:
        return {
            "spin": self.spin.value,
            "operator": self.operator.value,
            "backend": self.effective_backend().value,
            "momenta": self.family.value,
            "n": [self.n.x, self.n.y, self.n.z],
            "mass": self.mass,
        }


def correlation_quantity(config: QuantityConfig, a: Direction, b: Direction) -> Quantity:
    """x -> C(a, b) for fixed directions."""
    def quantity(x: float) -> float:
        return config.correlation_at(x)(a, b)
    return quantity


def inequality_result(kind: InequalityKind, config: QuantityConfig, x: float,
                      directions: Sequence[Direction],
                      tolerance: float = DEFAULT_SETTINGS.violation_tolerance) -> InequalityResult:
    echo = dict(config.describe(), x=x)
    return evaluate_inequality(kind, config.correlation_at(x), directions, echo, tolerance)


def inequality_value(kind: InequalityKind, config: QuantityConfig, x: float,
                     directions: Sequence[Direction]) -> float:
    return inequality_result(kind, config, x, directions).value


def inequality_quantity(kind: InequalityKind, config: QuantityConfig,
                        directions: Sequence[Direction]) -> Quantity:
    """x -> inequality value for fixed directions."""
    directions = tuple(directions)

    def quantity(x: float) -> float:
        return inequality_value(kind, config, x, directions)
    return quantity

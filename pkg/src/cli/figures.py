"""relcorr Figure Datasets

Fixed configurations of the five reference plots. Each dataset holds the
Newton-Wigner and the Czachor curve over x in [0, x_max].
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, Tuple

from ..common.settings import DEFAULT_SETTINGS
from ..correlation.engine import Backend
from ..inequalities.bell import InequalityKind
from ..kinematics.momenta import Z_AXIS, MomentaFamily
from ..kinematics.spin_matrices import Spin
from ..kinematics.vectors import Direction
from ..observables.spin_observables import SpinOperator
from ..scan.quantities import QuantityConfig, correlation_quantity, inequality_quantity
from ..scan.sweep import SweepResult, sweep_x


logger = logging.getLogger(__name__)

CORRELATION = "correlation"

_S3 = math.sqrt(3.0) / 2.0


@dataclass(frozen=True)
class FigureDefinition:
    number: int
    title: str
    quantity: str          # "correlation", "chsh" or "mermin"
    spin: Spin
    family: MomentaFamily
    directions: Tuple[Direction, ...]
    n: Direction = Z_AXIS

    def config(self, operator: SpinOperator, backend: Backend = Backend.CLOSED,
               mass: float = DEFAULT_SETTINGS.default_mass) -> QuantityConfig:
        return QuantityConfig(self.spin, operator, backend, self.family, self.n, mass,
                              fallback=True)

    def quantity_for(self, operator: SpinOperator, backend: Backend = Backend.CLOSED,
                     mass: float = DEFAULT_SETTINGS.default_mass):
        config = self.config(operator, backend, mass)
        if self.quantity == CORRELATION:
            return correlation_quantity(config, *self.directions)
        return inequality_quantity(InequalityKind(self.quantity), config, self.directions)

    def describe(self) -> Dict[str, object]:
        labels = ("a", "b", "c", "d")
        return {
            "figure": self.number,
            "title": self.title,
            "quantity": self.quantity,
            "spin": self.spin.value,
            "momenta": self.family.value,
            "n": [self.n.x, self.n.y, self.n.z],
            "directions": {label: [d.x, d.y, d.z]
                           for label, d in zip(labels, self.directions)},
        }


_Z = Z_AXIS
_UP_RIGHT = Direction(_S3, 0.0, 0.5)
_DOWN_RIGHT = Direction(_S3, 0.0, -0.5)

FIGURES: Dict[int, FigureDefinition] = {
    1: FigureDefinition(1, "spin-1/2 correlation, laboratory momenta", CORRELATION,
                        Spin.HALF, MomentaFamily.LAB, (_Z, _DOWN_RIGHT)),
    2: FigureDefinition(2, "spin-1/2 CHSH, c=(sqrt3/2,0,1/2)", InequalityKind.CHSH.value,
                        Spin.HALF, MomentaFamily.LAB, (_Z, _Z, _UP_RIGHT, _UP_RIGHT)),
    3: FigureDefinition(3, "spin-1/2 CHSH, c=(sqrt3/2,0,-1/2)", InequalityKind.CHSH.value,
                        Spin.HALF, MomentaFamily.LAB, (_Z, _Z, _DOWN_RIGHT, _UP_RIGHT)),
    # only a.b = -1/2 and a.n = b.n = 1/2 are fixed; this is one realisation
    4: FigureDefinition(4, "spin-1 correlation, c.m. frame", CORRELATION,
                        Spin.ONE, MomentaFamily.CM, (_UP_RIGHT, Direction(-_S3, 0.0, 0.5))),
    5: FigureDefinition(5, "spin-1 Bell-Mermin, c.m. frame", InequalityKind.BELL_MERMIN.value,
                        Spin.ONE, MomentaFamily.CM,
                        (Direction.parse("0.995004,0,0.0998334"),
                         Direction.parse("-0.40899,0.907061,0.0998334"),
                         Direction.parse("-0.581043,-0.807727,0.0998334"))),
}


class FigureError(Exception):
    def __init__(self, number):
        self.number = number
        super().__init__(f"unknown figure {number!r}; choose one of {sorted(FIGURES)}")


def figure_definition(number: int) -> FigureDefinition:
    if number not in FIGURES:
        raise FigureError(number)
    return FIGURES[number]


def generate_figure(number: int,
                    x_max: float = DEFAULT_SETTINGS.figure_x_max,
                    steps: int = DEFAULT_SETTINGS.figure_steps,
                    backend: Backend = Backend.CLOSED,
                    mass: float = DEFAULT_SETTINGS.default_mass) -> Tuple[SweepResult, SweepResult]:
    """(NW sweep, Czachor sweep) of figure *number* on a shared grid."""
    definition = figure_definition(number)
    sweeps = []
    for operator in (SpinOperator.NEWTON_WIGNER, SpinOperator.CZACHOR):
        config = definition.config(operator, backend, mass)
        if config.effective_backend() is not backend:
            logger.warning("figure %d: no closed form for the %s curve, using the oracle",
                           number, operator.label)
        sweeps.append(sweep_x(definition.quantity_for(operator, backend, mass), 0.0, x_max, steps,
                              label=f"figure{number}-{operator.value}",
                              configuration=dict(definition.describe(), **config.describe())))
    return sweeps[0], sweeps[1]

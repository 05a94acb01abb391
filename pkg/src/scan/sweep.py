"""relcorr Sweeps

Uniform-grid evaluation of a quantity over x, and the derived views used
by the figure datasets: violation intervals and the NW/Czachor gap.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
from dataclasses_json import dataclass_json

from ..common.settings import DEFAULT_SETTINGS


logger = logging.getLogger(__name__)


class ScanError(Exception):
    """Invalid scan request or a non-finite quantity."""

    def __init__(self, message: str, x: Optional[float] = None):
        self.x = x
        super().__init__(message)


@dataclass
class SweepResult:
    label: str
    xs: List[float]
    values: List[float]
    configuration: Dict[str, object] = field(default_factory=dict)

    def points(self) -> List[Tuple[float, float]]:
        return list(zip(self.xs, self.values))

    def __len__(self) -> int:
        return len(self.xs)


@dataclass_json
@dataclass
class OperatorGap:
    x: float
    gap: float
    value_nw: float
    value_cz: float


def check_range(x_min: float, x_max: float) -> None:
    if not (math.isfinite(x_min) and math.isfinite(x_max) and 0.0 <= x_min < x_max):
        raise ScanError(f"invalid x range [{x_min!r}, {x_max!r}]; need 0 <= x_min < x_max")


def grid(x_min: float, x_max: float, steps: int) -> np.ndarray:
    """*steps* uniformly spaced points with both endpoints included."""
    check_range(x_min, x_max)
    if steps < 2:
        raise ScanError(f"steps must be >= 2, got {steps}")
    xs = np.linspace(x_min, x_max, int(steps))
    if np.any(np.diff(xs) <= 0):
        raise ScanError(f"{steps} steps do not resolve [{x_min!r}, {x_max!r}]")
    return xs


def evaluate(f: Callable[[float], float], x: float) -> float:
    value = float(f(float(x)))
    if not math.isfinite(value):
        raise ScanError(f"quantity is not finite at x={x!r}: {value!r}", x)
    return value


def sweep_x(f: Callable[[float], float], x_min: float, x_max: float,
            steps: int = DEFAULT_SETTINGS.figure_steps, label: str = "",
            configuration: Optional[Dict[str, object]] = None) -> SweepResult:
    xs = grid(x_min, x_max, steps)
    values = [evaluate(f, x) for x in xs]
    logger.debug("swept %s over [%g, %g] at %d points", label or "quantity", x_min, x_max, len(xs))
    return SweepResult(label, [float(x) for x in xs], values, dict(configuration or {}))


def violation_intervals(sweep: SweepResult, bound: float,
                        tolerance: float = DEFAULT_SETTINGS.violation_tolerance
                        ) -> List[Tuple[float, float]]:
    """Maximal runs of grid points whose value exceeds ``bound + tolerance``.

    Each interval is reported by its first and last violating grid point.
    """
    intervals: List[Tuple[float, float]] = []
    start: Optional[float] = None
    last: Optional[float] = None
    for x, value in sweep.points():
        if value > bound + tolerance:
            if start is None:
                start = x
            last = x
        elif start is not None:
            intervals.append((start, last))
            start = None
    if start is not None:
        intervals.append((start, last))
    return intervals


def operator_gap(nw: SweepResult, cz: SweepResult) -> OperatorGap:
    """Largest |C_NW - C_Cz| over two sweeps sharing one grid."""
    if nw.xs != cz.xs:
        raise ScanError("operator sweeps must share the same x grid")
    if not nw.xs:
        raise ScanError("empty sweep")
    gaps = np.abs(np.asarray(nw.values) - np.asarray(cz.values))
    i = int(np.argmax(gaps))
    return OperatorGap(nw.xs[i], float(gaps[i]), nw.values[i], cz.values[i])

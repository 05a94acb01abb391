"""relcorr Local Extrema

Coarse-grid bracketing followed by golden-section refinement. Endpoint
extrema of the scanned interval are not reported.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, List, Tuple

import numpy as np
from dataclasses_json import dataclass_json

from ..common.settings import DEFAULT_SETTINGS
from .sweep import ScanError, evaluate, grid


logger = logging.getLogger(__name__)

INV_PHI = (math.sqrt(5) - 1) / 2
INV_PHI_SQUARED = (3 - math.sqrt(5)) / 2

MAX = "max"
MIN = "min"


@dataclass_json
@dataclass(frozen=True)
class Extremum:
    x_star: float
    value: float
    kind: str


def golden_section_search(func: Callable[[float], float], a: float, b: float,
                          tol: float = DEFAULT_SETTINGS.x_tol) -> Tuple[float, float]:
    """Bracket [c, d] of width <= tol around the minimum of *func* on [a, b].

    *func* is only ever evaluated strictly inside [a, b], and every
    iteration reuses one of the two previous evaluations.
    """
    (a, b) = (min(a, b), max(a, b))
    h = b - a
    if h <= tol:
        return a, b

    # steps needed to reach tol
    n = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))

    c = a + INV_PHI_SQUARED * h
    d = a + INV_PHI * h
    yc = func(c)
    yd = func(d)

    for _ in range(n - 1):
        if yc < yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARED * h
            yc = func(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = func(d)

    if yc < yd:
        return a, d
    return c, b


def _sign(value: float) -> int:
    return (value > 0) - (value < 0)


def bracket_extrema(xs: np.ndarray, ys: np.ndarray) -> List[Tuple[float, float, str]]:
    """(lo, hi, kind) for every sign change of the first difference of ys.

    Flat stretches (zero differences) are skipped so that a plateau does not
    hide or duplicate a turning point.
    """
    brackets = []
    diffs = np.diff(ys)
    last_sign = 0
    last_index = 0
    for i, diff in enumerate(diffs):
        sign = _sign(float(diff))
        if sign == 0:
            continue
        if last_sign != 0 and sign != last_sign:
            kind = MAX if last_sign > 0 else MIN
            brackets.append((float(xs[last_index]), float(xs[i + 1]), kind))
        last_sign = sign
        last_index = i
    return brackets


def find_local_extrema(f: Callable[[float], float], x_min: float, x_max: float,
                       coarse_steps: int = DEFAULT_SETTINGS.coarse_steps,
                       x_tol: float = DEFAULT_SETTINGS.x_tol) -> List[Extremum]:
    """Interior local extrema of *f* on [x_min, x_max], sorted by x_star."""
    if coarse_steps < 8:
        raise ScanError(f"coarse_steps must be >= 8, got {coarse_steps}")
    if not (math.isfinite(x_tol) and x_tol > 0):
        raise ScanError(f"x_tol must be positive, got {x_tol!r}")

    xs = grid(x_min, x_max, coarse_steps)
    ys = np.array([evaluate(f, x) for x in xs])

    extrema = []
    for lo, hi, kind in bracket_extrema(xs, ys):
        sign = -1.0 if kind == MAX else 1.0
        c, d = golden_section_search(lambda x: sign * evaluate(f, x), lo, hi, x_tol)
        x_star = 0.5 * (c + d)
        if x_star - x_min <= x_tol or x_max - x_star <= x_tol:
            logger.debug("dropping %s at the boundary x=%g", kind, x_star)
            continue
        value = evaluate(f, x_star)
        logger.debug("%s bracketed in [%g, %g], refined to x=%.10g value=%.12g",
                     kind, lo, hi, x_star, value)
        extrema.append(Extremum(x_star, value, kind))

    return sorted(extrema, key=lambda e: e.x_star)

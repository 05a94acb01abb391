"""relcorr Direction Optimisation

Maximises a Bell quantity over the measurement directions, each written as
spherical angles (theta, phi), with multi-restart Nelder-Mead; and over x
and directions jointly by alternating with the extremum search.

Random starts come from ``numpy.random.default_rng(seed)`` and are drawn up
front, so results are reproducible bit for bit for a given
(seed, restarts). Among equal values the lowest restart index wins.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from dataclasses_json import dataclass_json
from scipy.optimize import minimize

from ..common.settings import DEFAULT_SETTINGS
from ..inequalities.bell import InequalityKind, evaluate_inequality
from ..kinematics.vectors import Direction
from .extrema import MAX, find_local_extrema
from .quantities import QuantityConfig, inequality_quantity
from .sweep import ScanError, check_range, evaluate


logger = logging.getLogger(__name__)


@dataclass_json
@dataclass
class DirectionOptimum:
    kind: str
    x: float
    value: float
    directions: Dict[str, List[float]]
    restart: int
    configuration: Dict[str, object] = field(default_factory=dict)

    def direction_list(self) -> List[Direction]:
        return [Direction.normalized(v) for v in self.directions.values()]


@dataclass_json
@dataclass
class JointOptimum:
    kind: str
    x_star: float
    value: float
    directions: Dict[str, List[float]]
    rounds: int
    configuration: Dict[str, object] = field(default_factory=dict)


def angles_to_directions(params: Sequence[float]) -> List[Direction]:
    return [Direction.from_angles(params[i], params[i + 1]) for i in range(0, len(params), 2)]


def directions_to_angles(directions: Sequence[Direction]) -> np.ndarray:
    return np.array([angle for d in directions for angle in d.angles()], dtype=float)


def random_angles(rng: np.random.Generator, count: int) -> np.ndarray:
    """theta uniform in [0, pi], phi uniform in [-pi, pi], per direction."""
    params = np.empty(2 * count)
    params[0::2] = rng.uniform(0.0, math.pi, size=count)
    params[1::2] = rng.uniform(-math.pi, math.pi, size=count)
    return params


def _named(kind: InequalityKind, directions: Sequence[Direction]) -> Dict[str, List[float]]:
    return {label: [d.x, d.y, d.z] for label, d in zip(kind.labels, directions)}


def _check_directions(kind: InequalityKind, directions: Optional[Sequence[Direction]]) -> None:
    if directions is not None and len(directions) != len(kind.labels):
        raise ScanError(f"{kind.value} takes {len(kind.labels)} directions, got {len(directions)}")


def optimize_directions(kind: InequalityKind, config: QuantityConfig, x: float,
                        restarts: int = DEFAULT_SETTINGS.restarts,
                        rng_seed: int = 0,
                        initial: Optional[Sequence[Direction]] = None,
                        xatol: float = DEFAULT_SETTINGS.simplex_xatol,
                        fatol: float = DEFAULT_SETTINGS.simplex_fatol,
                        maxiter: int = DEFAULT_SETTINGS.simplex_maxiter) -> DirectionOptimum:
    """Best directions and value of *kind* at fixed x.

    With *initial* given, restart 0 starts from those directions and the
    remaining restarts from random angles.
    """
    if restarts < 1:
        raise ScanError(f"restarts must be >= 1, got {restarts}")
    _check_directions(kind, initial)

    corr = config.correlation_at(x)
    count = len(kind.labels)
    options = {"xatol": xatol, "fatol": fatol, "maxiter": maxiter, "maxfev": maxiter}

    def objective(params: np.ndarray) -> float:
        return -evaluate_inequality(kind, corr, angles_to_directions(params)).value

    rng = np.random.default_rng(rng_seed)
    starts = [random_angles(rng, count) for _ in range(restarts)]
    if initial is not None:
        starts[0] = directions_to_angles(initial)

    best_value = -math.inf
    best_params: Optional[np.ndarray] = None
    best_index = -1
    for index, start in enumerate(starts):
        result = minimize(objective, start, method="Nelder-Mead", options=options)
        # restart the simplex once at the optimum to undo early collapse
        polished = minimize(objective, result.x, method="Nelder-Mead", options=options)
        value = -float(polished.fun)
        logger.debug("restart %d: value %.12f after %d + %d evaluations",
                     index, value, result.nfev, polished.nfev)
        if value > best_value:
            best_value, best_params, best_index = value, polished.x, index

    directions = angles_to_directions(best_params)
    value = evaluate_inequality(kind, corr, directions).value
    logger.info("%s at x=%g: best value %.12f from restart %d", kind.value, x, value, best_index)
    return DirectionOptimum(kind.value, float(x), value, _named(kind, directions), best_index,
                            dict(config.describe(), restarts=restarts, seed=rng_seed))


def best_x(kind: InequalityKind, config: QuantityConfig, directions: Sequence[Direction],
           x_range: Tuple[float, float],
           coarse_steps: int = DEFAULT_SETTINGS.coarse_steps,
           x_tol: float = DEFAULT_SETTINGS.x_tol) -> Tuple[float, float]:
    """(x, value) maximising *kind* over x_range for fixed directions.

    Interior maxima come from :func:`find_local_extrema`; the endpoints are
    candidates too, so a monotone quantity still yields an answer.
    """
    f = inequality_quantity(kind, config, directions)
    x_min, x_max = x_range
    candidates = [(x_min, evaluate(f, x_min)), (x_max, evaluate(f, x_max))]
    candidates += [(e.x_star, e.value)
                   for e in find_local_extrema(f, x_min, x_max, coarse_steps, x_tol)
                   if e.kind == MAX]
    return max(candidates, key=lambda c: c[1])


def optimize_joint(kind: InequalityKind, config: QuantityConfig,
                   x_range: Tuple[float, float],
                   restarts: int = DEFAULT_SETTINGS.restarts,
                   rng_seed: int = 0,
                   directions: Optional[Sequence[Direction]] = None,
                   hold_directions: bool = False,
                   improvement: float = DEFAULT_SETTINGS.joint_improvement,
                   max_rounds: int = DEFAULT_SETTINGS.joint_max_rounds,
                   coarse_steps: int = DEFAULT_SETTINGS.coarse_steps,
                   x_tol: float = DEFAULT_SETTINGS.x_tol) -> JointOptimum:
    """Maximise *kind* over x in *x_range* and over directions.

    Rounds alternate an x search at fixed directions with a direction search
    at fixed x, until a round improves the value by less than *improvement*.
    With *hold_directions* only the x search runs.
    """
    x_min, x_max = (float(v) for v in x_range)
    check_range(x_min, x_max)
    _check_directions(kind, directions)
    if hold_directions and directions is None:
        raise ScanError("hold_directions needs explicit directions")

    if directions is None:
        start = optimize_directions(kind, config, 0.5 * (x_min + x_max), restarts, rng_seed)
        directions = start.direction_list()
    directions = list(directions)

    x_star, value = best_x(kind, config, directions, (x_min, x_max), coarse_steps, x_tol)
    rounds = 1
    while not hold_directions and rounds < max_rounds:
        optimum = optimize_directions(kind, config, x_star, restarts, rng_seed + rounds,
                                      initial=directions)
        candidate_dirs = optimum.direction_list()
        candidate_x, candidate = best_x(kind, config, candidate_dirs, (x_min, x_max),
                                        coarse_steps, x_tol)
        rounds += 1
        gain = candidate - value
        logger.debug("joint round %d: x=%.10g value=%.12f (gain %.3e)",
                     rounds, candidate_x, candidate, gain)
        if gain > 0:
            x_star, value, directions = candidate_x, candidate, candidate_dirs
        if gain < improvement:
            break

    return JointOptimum(kind.value, x_star, value, _named(kind, directions), rounds,
                        dict(config.describe(), restarts=restarts, seed=rng_seed,
                             hold_directions=hold_directions))

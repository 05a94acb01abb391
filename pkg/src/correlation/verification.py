"""relcorr Closed-Form Verification

Cross-checks every available closed form against the oracle on seeded random
configurations, for both momenta families.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from dataclasses_json import dataclass_json

from ..common.settings import DEFAULT_SETTINGS
from ..kinematics.momenta import MomentaFamily, pair_momenta
from ..kinematics.spin_matrices import Spin
from ..kinematics.vectors import Direction, Momentum
from ..observables.spin_observables import SpinOperator
from .closed_forms import (corr_cz_half, corr_cz_one, corr_cz_one_cm, corr_nw_half,
                           corr_nw_one_cm)
from .errors import CorrelationError
from .oracle import oracle_correlation


logger = logging.getLogger(__name__)

UNAVAILABLE = "closed form unavailable; oracle-only"


class VerificationError(CorrelationError):
    """Bad verification request."""
    pass


@dataclass(frozen=True)
class _Case:
    name: str
    spin: Spin
    operator: SpinOperator
    family: MomentaFamily
    # (k, p, x, n, a, b) -> closed value; None means no closed form
    closed: Optional[Callable[..., float]]


def _general(func):
    return lambda k, p, x, n, a, b: func(k, p, a, b)


def _cm_only(func):
    return lambda k, p, x, n, a, b: func(x, n, a, b)


CASES: Tuple[_Case, ...] = (
    _Case("half-nw-lab", Spin.HALF, SpinOperator.NEWTON_WIGNER, MomentaFamily.LAB, _general(corr_nw_half)),
    _Case("half-nw-cm", Spin.HALF, SpinOperator.NEWTON_WIGNER, MomentaFamily.CM, _general(corr_nw_half)),
    _Case("half-cz-lab", Spin.HALF, SpinOperator.CZACHOR, MomentaFamily.LAB, _general(corr_cz_half)),
    _Case("half-cz-cm", Spin.HALF, SpinOperator.CZACHOR, MomentaFamily.CM, _general(corr_cz_half)),
    _Case("one-nw-cm", Spin.ONE, SpinOperator.NEWTON_WIGNER, MomentaFamily.CM, _cm_only(corr_nw_one_cm)),
    _Case("one-nw-lab", Spin.ONE, SpinOperator.NEWTON_WIGNER, MomentaFamily.LAB, None),
    _Case("one-cz-lab", Spin.ONE, SpinOperator.CZACHOR, MomentaFamily.LAB, _general(corr_cz_one)),
    _Case("one-cz-cm", Spin.ONE, SpinOperator.CZACHOR, MomentaFamily.CM, _general(corr_cz_one)),
    _Case("one-cz-cm-reduced", Spin.ONE, SpinOperator.CZACHOR, MomentaFamily.CM, _cm_only(corr_cz_one_cm)),
)

CASE_NAMES = tuple(case.name for case in CASES)


@dataclass_json
@dataclass
class CaseResult:
    case: str
    samples: int
    max_discrepancy: Optional[float]
    status: str
    worst: Optional[Dict[str, object]] = None


@dataclass_json
@dataclass
class EquivalenceReport:
    sample_count: int
    x_range: List[float]
    seed: int
    tolerance: float
    max_discrepancy: float
    passed: bool
    worst_case: Optional[str]
    worst_configuration: Optional[Dict[str, object]]
    cases: List[CaseResult] = field(default_factory=list)


def random_direction(rng: np.random.Generator) -> Direction:
    """Uniform direction on the sphere from three normal deviates."""
    while True:
        vec = rng.normal(size=3)
        if np.linalg.norm(vec) > 1e-8:
            return Direction.normalized(vec)


def _configuration(case: _Case, x: float, n: Direction, a: Direction, b: Direction,
                   k: Momentum, p: Momentum) -> Dict[str, object]:
    return {
        "case": case.name,
        "x": x,
        "n": [n.x, n.y, n.z],
        "a": [a.x, a.y, a.z],
        "b": [b.x, b.y, b.z],
        "k": [k.t, k.x, k.y, k.z],
        "p": [p.t, p.x, p.y, p.z],
    }


def verify_equivalence(sample_count: int,
                       x_range: Sequence[float] = (0.0, 10.0),
                       rng_seed: int = 42,
                       tolerance: float = DEFAULT_SETTINGS.verification_tolerance,
                       cases: Optional[Sequence[str]] = None,
                       mass: float = DEFAULT_SETTINGS.default_mass) -> EquivalenceReport:
    """Compare closed forms with the oracle on *sample_count* random draws.

    Every sample draws (x, n, a, b) once, in that order, and is used by all
    selected cases, so the report depends only on the arguments.
    """
    if sample_count < 1:
        raise VerificationError(f"sample_count must be >= 1, got {sample_count}")
    x_min, x_max = (float(v) for v in x_range)
    if not (0.0 <= x_min <= x_max):
        raise VerificationError(f"invalid x range [{x_min}, {x_max}]")

    selected = CASES if cases is None else tuple(c for c in CASES if c.name in set(cases))
    unknown = set(cases or ()) - set(CASE_NAMES)
    if unknown:
        raise VerificationError(f"unknown case(s): {', '.join(sorted(unknown))}")

    rng = np.random.default_rng(rng_seed)
    draws = []
    for _ in range(sample_count):
        x = float(rng.uniform(x_min, x_max)) if x_max > x_min else x_min
        draws.append((x, random_direction(rng), random_direction(rng), random_direction(rng)))

    results: List[CaseResult] = []
    overall = 0.0
    worst_case: Optional[str] = None
    worst_config: Optional[Dict[str, object]] = None

    for case in selected:
        if case.closed is None:
            logger.info("%s: %s", case.name, UNAVAILABLE)
            results.append(CaseResult(case.name, 0, None, UNAVAILABLE))
            continue

        case_max = 0.0
        case_worst = None
        for x, n, a, b in draws:
            k, p = pair_momenta(case.family, x, mass, n)
            closed = case.closed(k, p, x, n, a, b)
            oracle = oracle_correlation(case.spin, case.operator, k, p, a, b)
            diff = abs(closed - oracle)
            if diff > case_max or case_worst is None:
                case_max = max(case_max, diff)
                case_worst = _configuration(case, x, n, a, b, k, p)

        status = "ok" if case_max < tolerance else "fail"
        logger.debug("%s: max discrepancy %.3e over %d samples", case.name, case_max, len(draws))
        results.append(CaseResult(case.name, len(draws), case_max, status, case_worst))
        if worst_case is None or case_max > overall:
            overall = max(overall, case_max)
            worst_case = case.name
            worst_config = case_worst

    return EquivalenceReport(
        sample_count=sample_count,
        x_range=[x_min, x_max],
        seed=rng_seed,
        tolerance=tolerance,
        max_discrepancy=overall,
        passed=overall < tolerance,
        worst_case=worst_case,
        worst_configuration=worst_config,
        cases=results,
    )

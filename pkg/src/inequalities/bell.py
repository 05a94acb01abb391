"""relcorr Bell Inequalities

CHSH and Bell-Mermin quantities evaluated with any correlation functional
C(a, b):

    CHSH        = |C(a,b) - C(a,d) + C(c,b) + C(c,d)|   <= 2
    Bell-Mermin =  C(a,b) + C(b,c) + C(c,a)              <= 1   (spin 1)

Bell-Mermin is signed, exactly as stated for the spin-1 singlet.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Optional

from dataclasses_json import dataclass_json

from ..common.settings import DEFAULT_SETTINGS
from ..kinematics.spin_matrices import Spin
from ..kinematics.vectors import Direction


class InequalityError(Exception):
    """Raised when an inequality is requested for an unsuitable backend."""
    pass


class InequalityKind(Enum):
    CHSH = "chsh"
    BELL_MERMIN = "mermin"

    @property
    def bound(self) -> float:
        return 2.0 if self is InequalityKind.CHSH else 1.0

    @property
    def labels(self) -> tuple:
        """Names of the directions the inequality takes, in order."""
        return ("a", "b", "c", "d") if self is InequalityKind.CHSH else ("a", "b", "c")


Correlator = Callable[[Direction, Direction], float]


@dataclass_json
@dataclass
class InequalityResult:
    kind: str
    value: float
    bound: float
    violated: bool
    directions: Dict[str, list]
    configuration: Dict[str, object] = field(default_factory=dict)


def _result(kind: InequalityKind, value: float, directions: Dict[str, Direction],
            configuration: Optional[Dict[str, object]],
            tolerance: float) -> InequalityResult:
    return InequalityResult(
        kind=kind.value,
        value=value,
        bound=kind.bound,
        violated=value > kind.bound + tolerance,
        directions={name: [d.x, d.y, d.z] for name, d in directions.items()},
        configuration=dict(configuration or {}),
    )


def _check_directions(**directions) -> None:
    for name, d in directions.items():
        if not isinstance(d, Direction):
            raise InequalityError(f"direction {name} must be a unit Direction, got {d!r}")


def chsh(corr: Correlator, a: Direction, b: Direction, c: Direction, d: Direction,
         configuration: Optional[Dict[str, object]] = None,
         tolerance: float = DEFAULT_SETTINGS.violation_tolerance) -> InequalityResult:
    """|C(a,b) - C(a,d) + C(c,b) + C(c,d)| against the bound 2."""
    _check_directions(a=a, b=b, c=c, d=d)
    value = abs(corr(a, b) - corr(a, d) + corr(c, b) + corr(c, d))
    return _result(InequalityKind.CHSH, value, {"a": a, "b": b, "c": c, "d": d},
                   configuration, tolerance)


def bell_mermin(corr: Correlator, a: Direction, b: Direction, c: Direction,
                configuration: Optional[Dict[str, object]] = None,
                tolerance: float = DEFAULT_SETTINGS.violation_tolerance) -> InequalityResult:
    """C(a,b) + C(b,c) + C(c,a) against the bound 1.

    *corr* must be a spin-1 correlator; objects that carry a ``spin``
    attribute (such as CorrelationFunction) are checked.
    """
    spin = getattr(corr, "spin", None)
    if spin is not None and spin is not Spin.ONE:
        raise InequalityError("the Bell-Mermin inequality is stated for the spin-1 singlet; "
                              f"got a spin-{spin.value} correlator")
    _check_directions(a=a, b=b, c=c)
    value = corr(a, b) + corr(b, c) + corr(c, a)
    return _result(InequalityKind.BELL_MERMIN, value, {"a": a, "b": b, "c": c},
                   configuration, tolerance)


def evaluate_inequality(kind: InequalityKind, corr: Correlator, directions,
                        configuration: Optional[Dict[str, object]] = None,
                        tolerance: float = DEFAULT_SETTINGS.violation_tolerance) -> InequalityResult:
    """Dispatch on *kind* with directions given in :attr:`InequalityKind.labels` order."""
    directions = tuple(directions)
    if len(directions) != len(kind.labels):
        raise InequalityError(
            f"{kind.value} needs {len(kind.labels)} directions, got {len(directions)}")
    if kind is InequalityKind.CHSH:
        return chsh(corr, *directions, configuration=configuration, tolerance=tolerance)
    return bell_mermin(corr, *directions, configuration=configuration, tolerance=tolerance)

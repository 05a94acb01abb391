"""relcorr Pair Momenta

Momentum configurations of the EPR pair parameterised by

    x = W^2 / (4 m^2) - 1,

W being the invariant total energy of the pair. x = 0 is the
nonrelativistic limit; in the centre-of-mass frame (v/c)^2 = x / (x + 1).
"""

import math
from enum import Enum
from typing import Optional, Tuple

from .vectors import Direction, KinematicsError, Momentum, minkowski_dot


class MomentaFamily(Enum):
    """Which one-parameter family of pair momenta to use."""
    LAB = "eq13"  # k = m(sqrt(4x+1), sqrt(x), 0, -sqrt(3x)), p mirrored in x
    CM = "cm"     # p = k^pi, k along n

    @classmethod
    def _missing_(cls, value):
        if isinstance(value, str) and value.lower() in LAB_ALIASES:
            return cls.LAB
        return None


LAB_ALIASES = ("lab",)


Z_AXIS = Direction(0.0, 0.0, 1.0)


def _check_x_and_mass(x: float, m: float) -> None:
    if not (math.isfinite(x) and x >= 0):
        raise KinematicsError(f"x must be a finite non-negative number, got {x!r}")
    if not (math.isfinite(m) and m > 0):
        raise KinematicsError(f"mass must be positive, got {m!r}")


def momenta_from_x(x: float, m: float = 1.0) -> Tuple[Momentum, Momentum]:
    """Laboratory configuration in which both particles share a -z drift.

    k = m(sqrt(4x+1),  sqrt(x), 0, -sqrt(3x))
    p = m(sqrt(4x+1), -sqrt(x), 0, -sqrt(3x))

    so that (k + p)^2 = 4 m^2 (x + 1).
    """
    _check_x_and_mass(x, m)
    energy = m * math.sqrt(4.0 * x + 1.0)
    kx = m * math.sqrt(x)
    kz = -m * math.sqrt(3.0 * x)
    k = Momentum(energy, kx, 0.0, kz, m)
    p = Momentum(energy, -kx, 0.0, kz, m)
    return k, p


def cm_momenta(x: float, m: float = 1.0,
               n: Optional[Direction] = None) -> Tuple[Momentum, Momentum]:
    """Centre-of-mass configuration k = (m sqrt(x+1), m sqrt(x) n), p = k^pi."""
    _check_x_and_mass(x, m)
    if n is None:
        n = Z_AXIS
    energy = m * math.sqrt(x + 1.0)
    size = m * math.sqrt(x)
    k = Momentum(energy, size * n.x, size * n.y, size * n.z, m)
    return k, k.parity()


def pair_momenta(family: MomentaFamily, x: float, m: float = 1.0,
                 n: Optional[Direction] = None) -> Tuple[Momentum, Momentum]:
    """Dispatch on *family*; *n* is only meaningful for the c.m. family."""
    if family is MomentaFamily.LAB:
        return momenta_from_x(x, m)
    if family is MomentaFamily.CM:
        return cm_momenta(x, m, n)
    raise KinematicsError(f"unknown momenta family: {family!r}")


def invariant_energy(k: Momentum, p: Momentum) -> float:
    """W = sqrt((k + p)^2)."""
    return math.sqrt((k + p).square())


def x_from_invariant_energy(w: float, m: float = 1.0) -> float:
    if not (m > 0 and w >= 2 * m * (1 - 1e-15)):
        raise KinematicsError(f"invariant energy {w!r} is below threshold 2m = {2 * m!r}")
    return max(0.0, w * w / (4.0 * m * m) - 1.0)


def x_from_momenta(k: Momentum, p: Momentum) -> float:
    """x for an equal-mass pair, from (k + p)^2 = 2 m^2 + 2 k.p."""
    if not math.isclose(k.mass, p.mass, rel_tol=1e-12):
        raise KinematicsError(f"unequal masses {k.mass!r} and {p.mass!r}")
    m2 = k.mass * k.mass
    return max(0.0, (2.0 * m2 + 2.0 * minkowski_dot(k, p)) / (4.0 * m2) - 1.0)


def velocity_from_x(x: float) -> float:
    """c.m. particle speed v/c = sqrt(x / (x + 1))."""
    _check_x_and_mass(x, 1.0)
    return math.sqrt(x / (x + 1.0))


def x_from_velocity(v: float) -> float:
    """Inverse of :func:`velocity_from_x`; v in [0, 1)."""
    if not (0.0 <= v < 1.0):
        raise KinematicsError(f"speed must lie in [0, 1), got {v!r}")
    return v * v / (1.0 - v * v)


def is_cm_pair(k: Momentum, p: Momentum, rtol: float = 1e-12) -> bool:
    """True when p = k^pi to relative tolerance *rtol* (scaled by k0)."""
    scale = max(k.t, p.t)
    return (abs(k.t - p.t) <= rtol * scale
            and abs(k.x + p.x) <= rtol * scale
            and abs(k.y + p.y) <= rtol * scale
            and abs(k.z + p.z) <= rtol * scale)

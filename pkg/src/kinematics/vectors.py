"""relcorr Four-Vectors and Directions

Real four-vectors with the (+,-,-,-) metric, on-shell momenta and unit
measurement directions. Natural units, c = 1.
"""

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from ..common.settings import DEFAULT_SETTINGS


class KinematicsError(Exception):
    """Base exception for kinematics errors."""
    pass


class OffShellError(KinematicsError):
    """A momentum does not satisfy k.k = m^2 with positive energy."""

    def __init__(self, message: str, components: Sequence[float], mass: float):
        super().__init__(f"{message}: k = {tuple(components)}, m = {mass}")
        self.components = tuple(components)
        self.mass = mass


class InvalidDirectionError(KinematicsError):
    """A measurement direction is not a unit 3-vector."""

    def __init__(self, message: str, components: Sequence[float]):
        super().__init__(f"{message}: {tuple(components)}")
        self.components = tuple(components)


# Minkowski metric, signature (+,-,-,-)
METRIC = np.diag([1.0, -1.0, -1.0, -1.0])

FourVectorLike = Union['FourVector', Sequence[float], np.ndarray]


@dataclass(frozen=True)
class FourVector:
    """Real four-vector (t, x, y, z)."""
    t: float
    x: float
    y: float
    z: float

    @classmethod
    def from_array(cls, components: Iterable[float]) -> 'FourVector':
        t, x, y, z = (float(c) for c in components)
        return cls(t, x, y, z)

    def as_array(self) -> np.ndarray:
        return np.array([self.t, self.x, self.y, self.z], dtype=float)

    @property
    def spatial(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)

    def square(self) -> float:
        return minkowski_dot(self, self)

    def __add__(self, other: 'FourVector') -> 'FourVector':
        return FourVector.from_array(self.as_array() + as_components(other))

    def __sub__(self, other: 'FourVector') -> 'FourVector':
        return FourVector.from_array(self.as_array() - as_components(other))

    def scaled(self, factor: float) -> 'FourVector':
        return FourVector.from_array(factor * self.as_array())


@dataclass(frozen=True)
class Momentum(FourVector):
    """On-shell four-momentum of a particle of mass m > 0.

    Construction validates positive energy and k.k = m^2 to
    ``on_shell_rtol * (k0)^2`` (the bound reduces to m^2 at rest and keeps
    ultra-relativistic momenta admissible).
    """
    mass: float = 1.0

    def __post_init__(self):
        components = (self.t, self.x, self.y, self.z)
        if not all(math.isfinite(c) for c in components):
            raise OffShellError("non-finite momentum", components, self.mass)
        if not (self.mass > 0 and math.isfinite(self.mass)):
            raise OffShellError("mass must be positive", components, self.mass)
        if self.t < self.mass * (1.0 - DEFAULT_SETTINGS.on_shell_rtol):
            raise OffShellError("energy below rest mass", components, self.mass)
        residual = abs(self.square() - self.mass ** 2)
        if residual > DEFAULT_SETTINGS.on_shell_rtol * max(self.t ** 2, self.mass ** 2):
            raise OffShellError(f"off-shell by {residual:.3e}", components, self.mass)

    @classmethod
    def from_three_momentum(cls, vector: Iterable[float], mass: float = 1.0) -> 'Momentum':
        """Build the on-shell momentum (sqrt(m^2 + |k|^2), k)."""
        kx, ky, kz = (float(c) for c in vector)
        energy = math.sqrt(mass ** 2 + kx * kx + ky * ky + kz * kz)
        return cls(energy, kx, ky, kz, mass)

    @property
    def energy(self) -> float:
        return self.t

    @property
    def velocity(self) -> float:
        """Speed |k|/k0 (in units of c)."""
        return float(np.linalg.norm(self.spatial)) / self.t

    def parity(self) -> 'Momentum':
        """k^pi = (k0, -k)."""
        return Momentum(self.t, -self.x, -self.y, -self.z, self.mass)

    def rest(self) -> 'Momentum':
        """The rest-frame momentum (m, 0, 0, 0) of the same mass."""
        return Momentum(self.mass, 0.0, 0.0, 0.0, self.mass)


@dataclass(frozen=True)
class Direction:
    """Unit 3-vector along which a spin component is measured."""
    x: float
    y: float
    z: float

    def __post_init__(self):
        norm = math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)
        if not math.isfinite(norm) or abs(norm - 1.0) > DEFAULT_SETTINGS.unit_tolerance:
            raise InvalidDirectionError(
                f"direction is not unit (|a| = {norm!r})", (self.x, self.y, self.z))

    @classmethod
    def normalized(cls, vector: Iterable[float],
                   tolerance: Optional[float] = None) -> 'Direction':
        """Normalise *vector* onto the unit sphere.

        With *tolerance* set, vectors whose length is further than
        *tolerance* from 1 are rejected instead of rescaled.
        """
        components = np.asarray(list(vector), dtype=float)
        if components.shape != (3,):
            raise InvalidDirectionError("direction needs exactly 3 components", tuple(components))
        norm = float(np.linalg.norm(components))
        if not math.isfinite(norm) or norm == 0.0:
            raise InvalidDirectionError("direction has zero or non-finite length", tuple(components))
        if tolerance is not None and abs(norm - 1.0) > tolerance:
            raise InvalidDirectionError(
                f"direction length {norm:.9g} is not within {tolerance:g} of 1", tuple(components))
        ux, uy, uz = components / norm
        return cls(float(ux), float(uy), float(uz))

    @classmethod
    def parse(cls, text: str, tolerance: Optional[float] = None) -> 'Direction':
        """Parse ``"x,y,z"`` and normalise (rounded six-digit input is accepted)."""
        if tolerance is None:
            tolerance = DEFAULT_SETTINGS.direction_parse_tolerance
        parts = [p.strip() for p in text.split(',')]
        if len(parts) != 3:
            raise InvalidDirectionError(f"expected 'x,y,z', got {text!r}", ())
        try:
            values = [float(p) for p in parts]
        except ValueError:
            raise InvalidDirectionError(f"non-numeric component in {text!r}", ())
        return cls.normalized(values, tolerance)

    @classmethod
    def from_angles(cls, theta: float, phi: float) -> 'Direction':
        """Spherical angles: theta from +z, phi azimuth from +x."""
        st = math.sin(theta)
        return cls.normalized((st * math.cos(phi), st * math.sin(phi), math.cos(theta)))

    def angles(self) -> tuple:
        """Inverse of :meth:`from_angles`, theta in [0, pi], phi in (-pi, pi]."""
        theta = math.acos(max(-1.0, min(1.0, self.z)))
        phi = math.atan2(self.y, self.x)
        return theta, phi

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)

    def dot(self, vector: Iterable[float]) -> float:
        return float(np.dot(self.as_array(), np.asarray(list(vector), dtype=float)))

    def __str__(self) -> str:
        return f"({self.x:.9g}, {self.y:.9g}, {self.z:.9g})"


def as_components(u: FourVectorLike) -> np.ndarray:
    """Four components of *u* as an array (complex inputs are kept complex)."""
    if isinstance(u, FourVector):
        return u.as_array()
    arr = np.asarray(u)
    if arr.shape != (4,):
        raise KinematicsError(f"expected 4 components, got shape {arr.shape}")
    return arr


def minkowski_dot(u: FourVectorLike, v: FourVectorLike):
    """u.v = u0 v0 - u.v (no complex conjugation).

    Returns a float for real inputs; complex polarization vectors give a
    complex scalar.
    """
    result = as_components(u) @ METRIC @ as_components(v)
    if np.iscomplexobj(result):
        return complex(result)
    return float(result)

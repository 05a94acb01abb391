"""relcorr Pair States

Two-particle states with sharp momenta (k, p) as complex coefficient matrices
psi[sigma, lambda] (Alice's spin on rows, Bob's on columns). With the momenta
fixed, spin space is the whole state space.

The covariant normalisation factors 2k0 delta^3(.) of the basis kets are
dropped: they cancel between numerator and denominator of every correlation
function computed from these coefficients.
"""

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from ..kinematics.spin_matrices import Spin, pauli_matrices
from ..kinematics.vectors import METRIC, Momentum, minkowski_dot
from .polarization import polarization_vectors


class StateError(Exception):
    """Raised when a pair state cannot be built from the given momenta."""
    pass


@dataclass(frozen=True, eq=False)
class PairState:
    """Coefficient matrix of a two-particle state with sharp momenta."""
    spin: Spin
    k: Momentum
    p: Momentum
    coefficients: np.ndarray

    def __post_init__(self):
        dim = self.spin.dimension
        if self.coefficients.shape != (dim, dim):
            raise StateError(
                f"spin-{self.spin.value} state needs a {dim}x{dim} coefficient "
                f"matrix, got shape {self.coefficients.shape}")
        if not np.all(np.isfinite(self.coefficients)):
            raise StateError("state coefficients are not finite")
        if self.norm_squared() <= 0.0:
            raise StateError("state coefficients are all zero")

    def norm_squared(self) -> float:
        return float(np.sum(np.abs(self.coefficients) ** 2))

    def scaled(self, factor: complex) -> 'PairState':
        """Same state up to an overall complex factor."""
        return PairState(self.spin, self.k, self.p, factor * self.coefficients)

    def normalized(self) -> 'PairState':
        return self.scaled(1.0 / math.sqrt(self.norm_squared()))


def _check_pair(k: Momentum, p: Momentum) -> float:
    if not (isinstance(k, Momentum) and isinstance(p, Momentum)):
        raise StateError("pair states need on-shell Momentum objects")
    if not math.isclose(k.mass, p.mass, rel_tol=1e-12):
        raise StateError(f"particles must have equal mass, got {k.mass!r} and {p.mass!r}")
    return k.mass


def spin_half_pair_state(k: Momentum, p: Momentum) -> PairState:
    """Pseudoscalar state of two spin-1/2 particles.

        psi = N { [1 (1 + (k0+p0)/m + k.p/m^2) - i (k x p).sigma / m^2] sigma_2 }

    with N = -i / (sqrt(2) sqrt((1 + k0/m)(1 + p0/m))). In the c.m. frame
    (p = k^pi) it is the ordinary singlet; at rest psi = -i sqrt(2) sigma_2.
    """
    m = _check_pair(k, p)
    sigma = pauli_matrices()
    cross = np.cross(k.spatial, p.spatial)

    scalar = 1.0 + (k.t + p.t) / m + minkowski_dot(k, p) / (m * m)
    bracket = scalar * np.eye(2, dtype=complex)
    bracket -= 1j * (cross[0] * sigma[0] + cross[1] * sigma[1] + cross[2] * sigma[2]) / (m * m)

    norm = -1j / (math.sqrt(2.0) * math.sqrt((1.0 + k.t / m) * (1.0 + p.t / m)))
    return PairState(Spin.HALF, k, p, norm * (bracket @ sigma[1]))


def spin_one_pair_state(k: Momentum, p: Momentum) -> PairState:
    """Scalar state of two spin-1 particles, psi = e*^mu_sigma(k) e*_(mu lambda)(p).

    The coefficients are the metric contraction of the conjugated amplitudes,
    the components of the state along the kets |k, sigma> |p, lambda>. At rest
    psi is anti-diagonal (1, -1, 1): |+1,-1> - |0,0> + |-1,+1>.
    """
    _check_pair(k, p)
    coefficients = polarization_vectors(k).conj() @ METRIC @ polarization_vectors(p).conj().T
    return PairState(Spin.ONE, k, p, coefficients)


def pair_state(spin: Union[Spin, str, float], k: Momentum, p: Momentum) -> PairState:
    """Dispatch on spin."""
    spin = Spin.parse(spin)
    if spin is Spin.HALF:
        return spin_half_pair_state(k, p)
    return spin_one_pair_state(k, p)

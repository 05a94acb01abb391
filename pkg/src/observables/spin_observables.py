"""relcorr Spin Observables

Single-particle spin measurement matrices in the canonical (Wigner) basis
|k, sigma> for the two relativistic spin operators.

Matrix action of the Pauli-Lubanski vector
------------------------------------------
The Newton-Wigner spin operator is

    S_NW = (W - W0 P / (P0 + m)) / m.

In the canonical basis S_NW acts on |k, sigma> as the rest-frame spin
matrices S (that is what makes the basis canonical), so on that subspace

    W - W0 k / (k0 + m) = m S.                                     (a)

Transversality W.P = 0 gives W0 k0 = W.k. Dotting (a) with k:

    W.k - W0 |k|^2 / (k0 + m) = m k.S
    W0 (k0 - |k|^2 / (k0 + m)) = m k.S
    W0 m (k0 + m) / (k0 + m)   = m k.S        (|k|^2 = k0^2 - m^2)

hence

    W0 -> k.S,    W -> m S + k (k.S) / (k0 + m).

The Czachor observable a.W / sqrt(m^2 + (a.P)^2) then becomes

    [m a.S + (a.k)(k.S)/(k0 + m)] / sqrt(m^2 + (a.k)^2),

which is (a~).S for the unit vector a~ = B_k a / |B_k a|, B_k the spatial
block of the standard boost, so its spectrum is exactly {-s, ..., s}.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple, Union

import numpy as np

from ..kinematics.spin_matrices import Spin, contract, spin_matrices
from ..kinematics.vectors import Direction, Momentum


HERMITIAN_TOLERANCE = 1e-13
EIGENVALUE_TOLERANCE = 1e-10


class ObservableError(Exception):
    """Raised for invalid observable requests."""
    pass


class SpinOperator(Enum):
    NEWTON_WIGNER = "nw"
    CZACHOR = "cz"

    @property
    def label(self) -> str:
        return "Newton-Wigner" if self is SpinOperator.NEWTON_WIGNER else "Czachor"


@dataclass(frozen=True, eq=False)
class Observable:
    """Hermitian spin measurement matrix for one particle."""
    matrix: np.ndarray
    operator: SpinOperator
    direction: Direction
    spin: Spin
    momentum: Optional[Momentum] = None

    def is_hermitian(self, atol: float = HERMITIAN_TOLERANCE) -> bool:
        return bool(np.allclose(self.matrix, self.matrix.conj().T, rtol=0.0, atol=atol))

    def eigenvalues(self) -> np.ndarray:
        """Ascending real eigenvalues."""
        return np.linalg.eigvalsh(self.matrix)


def _require_direction(a) -> Direction:
    if not isinstance(a, Direction):
        raise ObservableError(f"expected a unit Direction, got {a!r}")
    return a


def _require_momentum(k) -> Momentum:
    if not isinstance(k, Momentum):
        raise ObservableError(f"expected an on-shell Momentum, got {k!r}")
    return k


def nw_spin_matrix(a: Direction, s: Union[Spin, str, float],
                   k: Optional[Momentum] = None) -> Observable:
    """a.S_NW on the canonical basis: the rest-frame matrix a.S for any k."""
    a = _require_direction(a)
    spin = Spin.parse(s)
    return Observable(contract(a.as_array(), spin), SpinOperator.NEWTON_WIGNER, a, spin, k)


def pauli_lubanski_matrices(k: Momentum,
                            s: Union[Spin, str, float]) -> Tuple[np.ndarray, Tuple[np.ndarray, ...]]:
    """(W0, (W1, W2, W3)) acting on |k, sigma>; see the module docstring."""
    k = _require_momentum(k)
    spin = Spin.parse(s)
    m = k.mass
    vec = k.spatial
    k_dot_s = contract(vec, spin)
    generators = spin_matrices(spin)
    w_vec = tuple(m * generators[i] + vec[i] * k_dot_s / (k.t + m) for i in range(3))
    return k_dot_s, w_vec


def nw_spin_from_pauli_lubanski(a: Direction, k: Momentum,
                                s: Union[Spin, str, float]) -> np.ndarray:
    """a.(W - W0 k/(k0 + m))/m built literally from the Pauli-Lubanski action.

    Agrees with :func:`nw_spin_matrix` up to rounding.
    """
    a = _require_direction(a)
    w0, w_vec = pauli_lubanski_matrices(k, s)
    m = k.mass
    av = a.as_array()
    a_dot_w = av[0] * w_vec[0] + av[1] * w_vec[1] + av[2] * w_vec[2]
    return (a_dot_w - a.dot(k.spatial) * w0 / (k.t + m)) / m


def czachor_matrix(a: Direction, k: Momentum, s: Union[Spin, str, float]) -> Observable:
    """a.W / sqrt(m^2 + (a.k)^2) on |k, sigma>."""
    a = _require_direction(a)
    k = _require_momentum(k)
    spin = Spin.parse(s)
    _, w_vec = pauli_lubanski_matrices(k, spin)
    av = a.as_array()
    a_dot_w = av[0] * w_vec[0] + av[1] * w_vec[1] + av[2] * w_vec[2]
    a_dot_k = a.dot(k.spatial)
    matrix = a_dot_w / math.sqrt(k.mass ** 2 + a_dot_k ** 2)
    return Observable(matrix, SpinOperator.CZACHOR, a, spin, k)


def effective_direction(operator: SpinOperator, a: Direction, k: Momentum) -> np.ndarray:
    """Unit vector a~ with observable = a~.S.

    a for Newton-Wigner; (m a + (a.k) k/(k0 + m)) / sqrt(m^2 + (a.k)^2)
    for Czachor.
    """
    if operator is SpinOperator.NEWTON_WIGNER:
        return a.as_array()
    m = k.mass
    a_dot_k = a.dot(k.spatial)
    vec = m * a.as_array() + a_dot_k * k.spatial / (k.t + m)
    return vec / math.sqrt(m * m + a_dot_k * a_dot_k)


def observable(operator: Union[SpinOperator, str], a: Direction, k: Momentum,
               s: Union[Spin, str, float]) -> Observable:
    """Dispatch on the operator choice."""
    operator = SpinOperator(operator) if isinstance(operator, str) else operator
    if operator is SpinOperator.NEWTON_WIGNER:
        return nw_spin_matrix(a, s, _require_momentum(k))
    return czachor_matrix(a, k, s)


def spectrum_matches(obs: Observable,
                     atol: float = EIGENVALUE_TOLERANCE) -> bool:
    """True when the eigenvalues equal (-s, ..., s) to *atol*."""
    s = obs.spin.value_s
    expected = np.arange(-s, s + 0.5, 1.0)
    return bool(np.allclose(obs.eigenvalues(), expected, rtol=0.0, atol=atol))



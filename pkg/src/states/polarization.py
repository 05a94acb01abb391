"""relcorr Polarization Vectors

Spin-1 amplitudes e_sigma(k) = L_k (0, e_sigma), with the rest-frame
spherical vectors

    e_(+1) = -(1,  i, 0)/sqrt(2),  e_0 = (0, 0, 1),  e_(-1) = (1, -i, 0)/sqrt(2).

They satisfy k.e_sigma(k) = 0 and eta(e_sigma, e_lambda*) = -delta.
"""

import numpy as np

from ..kinematics.boost import standard_boost
from ..kinematics.vectors import Momentum


_R = 1.0 / np.sqrt(2.0)

# Rows ordered (+1, 0, -1), columns (t, x, y, z).
REST_FRAME_POLARIZATIONS = np.array([
    [0.0, -_R, -1j * _R, 0.0],
    [0.0, 0.0, 0.0, 1.0],
    [0.0, _R, -1j * _R, 0.0],
], dtype=complex)
REST_FRAME_POLARIZATIONS.setflags(write=False)


def polarization_vectors(k: Momentum) -> np.ndarray:
    """3x4 complex array; row sigma is the four-vector e_sigma(k)."""
    return REST_FRAME_POLARIZATIONS @ standard_boost(k).T

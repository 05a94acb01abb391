"""relcorr Standard Boost

The rotation-free boost L_k with L_k (m, 0) = k and L_(m,0) = I.
"""

import numpy as np

from .vectors import KinematicsError, Momentum


def standard_boost(k: Momentum) -> np.ndarray:
    """4x4 matrix of the pure boost taking (m, 0, 0, 0) to k.

        L^0_0 = k0/m,  L^0_i = L^i_0 = k^i/m,
        L^i_j = delta_ij + k^i k^j / (m (k0 + m))

    *k* is validated on construction, so off-shell input never gets here as a
    Momentum.
    """
    if not isinstance(k, Momentum):
        raise KinematicsError(f"standard_boost needs an on-shell Momentum, got {type(k).__name__}")

    m = k.mass
    vec = k.spatial
    boost = np.empty((4, 4), dtype=float)
    boost[0, 0] = k.t / m
    boost[0, 1:] = vec / m
    boost[1:, 0] = vec / m
    boost[1:, 1:] = np.eye(3) + np.outer(vec, vec) / (m * (k.t + m))
    return boost


def spatial_boost_block(k: Momentum) -> np.ndarray:
    """The symmetric 3x3 block I + k k^T / (m (k0 + m)) of :func:`standard_boost`."""
    return standard_boost(k)[1:, 1:]

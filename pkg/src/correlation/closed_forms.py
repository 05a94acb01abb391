"""relcorr Closed-Form Correlations

Correlation functions transcribed term by term from their standard closed
forms. No algebraic simplification is applied here; reduced one-variable
forms live only in the tests.

Vectors: k, p are on-shell four-momenta (k.p is the Minkowski product,
bold k the spatial part); a, b, n are unit directions.
"""

import math

import numpy as np

from ..kinematics.vectors import Direction, Momentum, minkowski_dot
from .errors import ClosedFormError


def _same_mass(k: Momentum, p: Momentum) -> float:
    if not math.isclose(k.mass, p.mass, rel_tol=1e-12):
        raise ClosedFormError(f"closed forms assume equal masses, got {k.mass!r} and {p.mass!r}")
    return k.mass


def _check_x(x: float) -> None:
    if not (math.isfinite(x) and x >= 0):
        raise ClosedFormError(f"x must be finite and non-negative, got {x!r}")


def corr_nw_half(k: Momentum, p: Momentum, a: Direction, b: Direction) -> float:
    """Spin-1/2, Newton-Wigner spin, pseudoscalar state.

        -a.b + (k x p)/(m^2 + kp) . [ (a x b)
            + ((a.k)(b x p) - (b.p)(a x k)) / ((k0 + m)(p0 + m)) ]
    """
    m = _same_mass(k, p)
    av, bv = a.as_array(), b.as_array()
    kv, pv = k.spatial, p.spatial

    k_cross_p = np.cross(kv, pv)
    inner = (np.cross(av, bv)
             + (np.dot(av, kv) * np.cross(bv, pv) - np.dot(bv, pv) * np.cross(av, kv))
             / ((k.t + m) * (p.t + m)))
    return float(-np.dot(av, bv) + np.dot(k_cross_p, inner) / (m * m + minkowski_dot(k, p)))


def corr_cz_half(k: Momentum, p: Momentum, a: Direction, b: Direction) -> float:
    """Spin-1/2, Czachor observable, pseudoscalar state.

        m^2 / (sqrt(m^2 + (a.k)^2) sqrt(m^2 + (b.p)^2))
          * { -a.b + (a.k)(b.p)/m^2 - [a.(k+p)][b.(k+p)] / (m^2 + kp) }
    """
    m = _same_mass(k, p)
    av, bv = a.as_array(), b.as_array()
    kv, pv = k.spatial, p.spatial
    a_k = float(np.dot(av, kv))
    b_p = float(np.dot(bv, pv))
    total = kv + pv

    prefactor = m * m / (math.sqrt(m * m + a_k ** 2) * math.sqrt(m * m + b_p ** 2))
    braces = (-float(np.dot(av, bv))
              + a_k * b_p / (m * m)
              - float(np.dot(av, total)) * float(np.dot(bv, total)) / (m * m + minkowski_dot(k, p)))
    return prefactor * braces


def corr_nw_one_cm(x: float, n: Direction, a: Direction, b: Direction) -> float:
    """Spin-1, Newton-Wigner spin, scalar state, c.m. frame only.

        2 / (2 + (1+2x)^2) * [ -(1+2x)(a.b) + 2x (a.n)(b.n) ]
    """
    _check_x(x)
    a_b = a.dot(b.as_array())
    a_n = a.dot(n.as_array())
    b_n = b.dot(n.as_array())
    return 2.0 / (2.0 + (1.0 + 2.0 * x) ** 2) * (-(1.0 + 2.0 * x) * a_b + 2.0 * x * a_n * b_n)


def corr_cz_one(k: Momentum, p: Momentum, a: Direction, b: Direction) -> float:
    """Spin-1, Czachor observable, scalar state, any frame.

        2 [ -a.b (kp) - (a.p)(b.k) ]
        / [ (2 + (kp)^2/m^4) sqrt(m^2 + (a.k)^2) sqrt(m^2 + (b.p)^2) ]
    """
    m = _same_mass(k, p)
    av, bv = a.as_array(), b.as_array()
    kv, pv = k.spatial, p.spatial
    kp = minkowski_dot(k, p)

    numerator = 2.0 * (-float(np.dot(av, bv)) * kp - float(np.dot(av, pv)) * float(np.dot(bv, kv)))
    denominator = ((2.0 + kp ** 2 / m ** 4)
                   * math.sqrt(m * m + float(np.dot(av, kv)) ** 2)
                   * math.sqrt(m * m + float(np.dot(bv, pv)) ** 2))
    return numerator / denominator


def corr_cz_one_cm(x: float, n: Direction, a: Direction, b: Direction) -> float:
    """Spin-1, Czachor observable, scalar state, c.m. frame.

        2 [ -a.b (1+2x) + x (a.n)(b.n) ]
        / [ (2 + (1+2x)^2) sqrt(1 + (a.n)^2 x) sqrt(1 + (b.n)^2 x) ]
    """
    _check_x(x)
    a_b = a.dot(b.as_array())
    a_n = a.dot(n.as_array())
    b_n = b.dot(n.as_array())
    numerator = 2.0 * (-a_b * (1.0 + 2.0 * x) + x * a_n * b_n)
    denominator = ((2.0 + (1.0 + 2.0 * x) ** 2)
                   * math.sqrt(1.0 + a_n ** 2 * x)
                   * math.sqrt(1.0 + b_n ** 2 * x))
    return numerator / denominator

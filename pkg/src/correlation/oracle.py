"""relcorr Correlation Oracle

Brute-force normalised correlation

    C = <Psi| A (x) B |Psi> / (s^2 <Psi|Psi>)

as a quadratic form of the coefficient matrix psi[sigma, lambda]:

    sum psi*[s, l] A[s, s'] B[l, l'] psi[s', l'] = tr(psi^H A psi B^T).
"""

import math

import numpy as np

from ..common.settings import DEFAULT_SETTINGS
from ..kinematics.spin_matrices import Spin
from ..kinematics.vectors import Direction, Momentum
from ..observables.spin_observables import Observable, SpinOperator, observable
from ..states.pair_states import PairState, pair_state
from .errors import ImaginaryCorrelationError, OracleError


def _same_momentum(obs: Observable, expected: Momentum, who: str) -> None:
    if obs.momentum is None:
        return
    if obs.momentum != expected:
        raise OracleError(f"{who}'s observable was built at {obs.momentum}, state has {expected}")


def correlation_oracle(state: PairState, alice: Observable, bob: Observable,
                       imaginary_tolerance: float = DEFAULT_SETTINGS.imaginary_tolerance) -> float:
    """Normalised correlation of *alice* (x) *bob* in *state*.

    The imaginary part is checked on the normalised numerator.
    """
    dim = state.spin.dimension
    for who, obs in (("Alice", alice), ("Bob", bob)):
        if obs.matrix.shape != (dim, dim):
            raise OracleError(
                f"{who}'s observable is {obs.matrix.shape}, state needs {dim}x{dim}")
        if obs.spin is not state.spin:
            raise OracleError(f"{who}'s observable is for spin {obs.spin.value}, "
                              f"state is spin {state.spin.value}")
    _same_momentum(alice, state.k, "Alice")
    _same_momentum(bob, state.p, "Bob")

    psi = state.coefficients
    numerator = np.trace(psi.conj().T @ alice.matrix @ psi @ bob.matrix.T)
    value = numerator / (state.spin.value_s ** 2 * state.norm_squared())

    if abs(value.imag) > imaginary_tolerance:
        raise ImaginaryCorrelationError(abs(value.imag), imaginary_tolerance)
    return float(value.real)


def oracle_correlation(spin, operator, k: Momentum, p: Momentum,
                       a: Direction, b: Direction) -> float:
    """Build state and observables for (spin, operator) and evaluate the oracle."""
    spin = Spin.parse(spin)
    operator = SpinOperator(operator) if isinstance(operator, str) else operator
    state = pair_state(spin, k, p)
    value = correlation_oracle(state, observable(operator, a, k, spin),
                               observable(operator, b, p, spin))
    if not math.isfinite(value):
        raise OracleError(f"non-finite correlation for k={k}, p={p}")
    return value

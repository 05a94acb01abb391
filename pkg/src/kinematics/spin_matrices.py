"""relcorr Spin Matrices

Spin-1/2 and spin-1 generators in the basis ordered by descending S3
eigenvalue: (+1/2, -1/2) and (+1, 0, -1).
"""

from enum import Enum
from functools import lru_cache
from typing import Tuple, Union

import numpy as np


class SpinError(Exception):
    """Unsupported spin value."""
    pass


class Spin(Enum):
    HALF = "half"
    ONE = "one"

    @property
    def value_s(self) -> float:
        return 0.5 if self is Spin.HALF else 1.0

    @property
    def dimension(self) -> int:
        return 2 if self is Spin.HALF else 3

    @classmethod
    def parse(cls, value: Union['Spin', str, float]) -> 'Spin':
        """Accept a Spin, "half"/"one", "1/2"/"1" or 0.5/1."""
        if isinstance(value, Spin):
            return value
        if isinstance(value, str):
            text = value.strip().lower()
            aliases = {"half": cls.HALF, "1/2": cls.HALF, "0.5": cls.HALF,
                       "one": cls.ONE, "1": cls.ONE}
            if text in aliases:
                return aliases[text]
        elif isinstance(value, (int, float)):
            if value == 0.5:
                return cls.HALF
            if value == 1:
                return cls.ONE
        raise SpinError(f"unsupported spin: {value!r} (only 1/2 and 1)")


SpinMatrices = Tuple[np.ndarray, np.ndarray, np.ndarray]


@lru_cache(maxsize=None)
def _generators(spin: Spin) -> SpinMatrices:
    if spin is Spin.HALF:
        s1 = np.array([[0, 1], [1, 0]], dtype=complex) / 2
        s2 = np.array([[0, -1j], [1j, 0]], dtype=complex) / 2
        s3 = np.array([[1, 0], [0, -1]], dtype=complex) / 2
    else:
        r = 1.0 / np.sqrt(2.0)
        s1 = r * np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=complex)
        s2 = r * np.array([[0, -1j, 0], [1j, 0, -1j], [0, 1j, 0]], dtype=complex)
        s3 = np.diag([1.0, 0.0, -1.0]).astype(complex)
    for s in (s1, s2, s3):
        s.setflags(write=False)
    return s1, s2, s3


def spin_matrices(s: Union[Spin, str, float]) -> SpinMatrices:
    """(S1, S2, S3) satisfying [Si, Sj] = i eps_ijk Sk and S^2 = s(s+1).

    The returned arrays are shared and read-only.
    """
    return _generators(Spin.parse(s))


def pauli_matrices() -> SpinMatrices:
    """sigma_i = 2 S_i for spin 1/2."""
    s1, s2, s3 = _generators(Spin.HALF)
    return 2 * s1, 2 * s2, 2 * s3


def contract(vector, s: Union[Spin, str, float]) -> np.ndarray:
    """v.S for a real 3-vector v."""
    s1, s2, s3 = spin_matrices(s)
    v = np.asarray(vector, dtype=float)
    return v[0] * s1 + v[1] * s2 + v[2] * s3

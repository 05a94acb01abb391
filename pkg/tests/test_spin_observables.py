"""Tests for the Newton-Wigner and Czachor spin observables."""

import math
import unittest
import sys
import os

import numpy as np
from scipy.spatial.transform import Rotation

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.kinematics.spin_matrices import Spin, contract, spin_matrices
from src.kinematics.vectors import Direction, Momentum
from src.observables.spin_observables import (ObservableError, SpinOperator, czachor_matrix,
                                              effective_direction, nw_spin_from_pauli_lubanski,
                                              nw_spin_matrix, observable,
                                              pauli_lubanski_matrices, spectrum_matches)


def random_direction(rng):
    return Direction.normalized(rng.normal(size=3))


def random_momentum(rng, mass=1.0, scale=3.0):
    return Momentum.from_three_momentum(rng.normal(scale=scale, size=3), mass)


class TestNewtonWigner(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.default_rng(3)

    def test_z_component(self):
        """S_z is diag(1/2, -1/2) for spin 1/2."""
        obs = nw_spin_matrix(Direction(0.0, 0.0, 1.0), Spin.HALF)
        np.testing.assert_allclose(obs.matrix, np.diag([0.5, -0.5]))
        self.assertIs(obs.operator, SpinOperator.NEWTON_WIGNER)

    def test_independent_of_momentum(self):
        """The NW spin ignores the momentum."""
        a = random_direction(self.rng)
        k = random_momentum(self.rng)
        np.testing.assert_array_equal(nw_spin_matrix(a, "one", k).matrix,
                                      nw_spin_matrix(a, "one").matrix)

    def test_agrees_with_pauli_lubanski_construction(self):
        """The direct NW matrix matches the one built from W."""
        for spin in Spin:
            for _ in range(25):
                a = random_direction(self.rng)
                k = random_momentum(self.rng, mass=0.8, scale=5.0)
                scale = 1.0 + float(np.dot(k.spatial, k.spatial)) / k.mass ** 2
                np.testing.assert_allclose(nw_spin_from_pauli_lubanski(a, k, spin),
                                           nw_spin_matrix(a, spin).matrix,
                                           atol=1e-10 * scale)

    def test_spectrum(self):
        """NW eigenvalues run -s..s."""
        for spin in Spin:
            with self.subTest(spin=spin):
                self.assertTrue(spectrum_matches(nw_spin_matrix(random_direction(self.rng), spin)))

    def test_su2_for_rotated_triple(self):
        """Components along any right-handed orthonormal triple obey [S1, S2] = i S3."""
        for spin in Spin:
            identity = np.eye(spin.dimension)
            for _ in range(10):
                frame = Rotation.from_rotvec(self.rng.normal(size=3)).as_matrix()
                k = random_momentum(self.rng)
                s1, s2, s3 = (nw_spin_matrix(Direction.normalized(frame[:, i]), spin, k).matrix
                              for i in range(3))
                np.testing.assert_allclose(s1 @ s2 - s2 @ s1, 1j * s3, atol=1e-12)
                np.testing.assert_allclose(s2 @ s3 - s3 @ s2, 1j * s1, atol=1e-12)
                np.testing.assert_allclose(s3 @ s1 - s1 @ s3, 1j * s2, atol=1e-12)
                casimir = s1 @ s1 + s2 @ s2 + s3 @ s3
                np.testing.assert_allclose(casimir, spin.value_s * (spin.value_s + 1) * identity,
                                           atol=1e-12)


class TestPauliLubanski(unittest.TestCase):

    def test_transversality(self):
        """W0 k0 = W.k on every state."""
        k = Momentum.from_three_momentum((0.5, -1.5, 0.7), mass=1.2)
        for spin in Spin:
            w0, w = pauli_lubanski_matrices(k, spin)
            w_dot_k = sum(k.spatial[i] * w[i] for i in range(3))
            np.testing.assert_allclose(k.t * w0, w_dot_k, atol=1e-12)

    def test_rest_frame(self):
        """At rest W0 vanishes and W = m S."""
        k = Momentum(2.0, 0.0, 0.0, 0.0, 2.0)
        w0, w = pauli_lubanski_matrices(k, Spin.ONE)
        np.testing.assert_allclose(w0, np.zeros((3, 3)), atol=0.0)
        for wi, si in zip(w, spin_matrices(Spin.ONE)):
            np.testing.assert_allclose(wi, 2.0 * si)


class TestCzachor(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.default_rng(5)

    def test_reduces_to_nw_at_rest(self):
        """At rest the Czachor operator is the NW spin."""
        a = random_direction(self.rng)
        rest = Momentum(1.0, 0.0, 0.0, 0.0)
        for spin in Spin:
            np.testing.assert_allclose(czachor_matrix(a, rest, spin).matrix,
                                       nw_spin_matrix(a, spin).matrix, atol=1e-15)

    def test_effective_direction_is_unit(self):
        """The Czachor effective direction has unit length."""
        for _ in range(50):
            a = random_direction(self.rng)
            k = random_momentum(self.rng)
            vec = effective_direction(SpinOperator.CZACHOR, a, k)
            self.assertAlmostEqual(float(np.linalg.norm(vec)), 1.0, places=12)

    def test_matrix_is_effective_direction_contraction(self):
        """The Czachor matrix is S contracted with its effective direction."""
        a = random_direction(self.rng)
        k = random_momentum(self.rng)
        for spin in Spin:
            vec = effective_direction(SpinOperator.CZACHOR, a, k)
            np.testing.assert_allclose(czachor_matrix(a, k, spin).matrix, contract(vec, spin),
                                       atol=1e-13)

    def test_hermitian_with_proper_spectrum(self):
        """Czachor matrices are Hermitian with eigenvalues -s..s."""
        for spin in Spin:
            for _ in range(25):
                obs = czachor_matrix(random_direction(self.rng), random_momentum(self.rng), spin)
                self.assertTrue(obs.is_hermitian())
                self.assertTrue(spectrum_matches(obs))

    def test_direction_along_momentum_is_unchanged(self):
        """A direction along k is left unchanged."""
        k = Momentum.from_three_momentum((0.0, 0.0, 2.0))
        a = Direction(0.0, 0.0, 1.0)
        np.testing.assert_allclose(effective_direction(SpinOperator.CZACHOR, a, k), [0, 0, 1],
                                   atol=1e-15)

    def test_transverse_direction_matches_nw(self):
        """A direction transverse to k gives the NW matrix."""
        k = Momentum.from_three_momentum((0.0, 0.0, 2.0))
        a = Direction(1.0, 0.0, 0.0)
        np.testing.assert_allclose(czachor_matrix(a, k, Spin.HALF).matrix,
                                   nw_spin_matrix(a, Spin.HALF).matrix, atol=1e-15)

    def test_normalisation_uses_a_dot_k(self):
        """The Czachor matrix is a.W / sqrt(1 + (a.k)^2)."""
        k = Momentum.from_three_momentum((0.0, 0.0, 2.0))
        a = Direction.normalized((1.0, 0.0, 1.0))
        a_dot_k = a.dot(k.spatial)
        _, w = pauli_lubanski_matrices(k, Spin.HALF)
        a_dot_w = sum(a.as_array()[i] * w[i] for i in range(3))
        np.testing.assert_allclose(czachor_matrix(a, k, Spin.HALF).matrix,
                                   a_dot_w / math.sqrt(1.0 + a_dot_k ** 2), atol=1e-15)


class TestSmallMomentum(unittest.TestCase):

    def test_continuous_at_rest(self):
        """At |k| = 1e-8 m both observables match their rest-frame matrices."""
        rng = np.random.default_rng(8)
        rest = Momentum(1.0, 0.0, 0.0, 0.0)
        for _ in range(20):
            k = Momentum.from_three_momentum(1e-8 * random_direction(rng).as_array())
            a = random_direction(rng)
            for spin in Spin:
                for operator in SpinOperator:
                    with self.subTest(spin=spin, operator=operator):
                        np.testing.assert_allclose(observable(operator, a, k, spin).matrix,
                                                   observable(operator, a, rest, spin).matrix,
                                                   atol=1e-8)


class TestObservableDispatch(unittest.TestCase):

    def test_operator_by_string(self):
        """Operators and spins can be named by string."""
        k = Momentum.from_three_momentum((1.0, 0.0, 0.0))
        a = Direction(0.0, 1.0, 0.0)
        self.assertIs(observable("cz", a, k, "half").operator, SpinOperator.CZACHOR)
        self.assertIs(observable("nw", a, k, "half").momentum, k)

    def test_rejects_tuple_direction(self):
        """A plain tuple is not a Direction."""
        with self.assertRaises(ObservableError):
            nw_spin_matrix((0.0, 0.0, 1.0), Spin.HALF)

    def test_rejects_missing_momentum(self):
        """Czachor needs a Momentum."""
        with self.assertRaises(ObservableError):
            czachor_matrix(Direction(0.0, 0.0, 1.0), (1.0, 0.0, 0.0, 0.0), Spin.HALF)

    def test_labels(self):
        """Operators carry readable labels."""
        self.assertEqual(SpinOperator.NEWTON_WIGNER.label, "Newton-Wigner")
        self.assertEqual(SpinOperator.CZACHOR.label, "Czachor")


if __name__ == '__main__':
    unittest.main()

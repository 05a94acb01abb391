"""Tests for polarization vectors and the two-particle states."""

import unittest
import sys
import os

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.kinematics.momenta import cm_momenta, momenta_from_x
from src.kinematics.spin_matrices import Spin
from src.kinematics.vectors import METRIC, Momentum, minkowski_dot
from src.states.pair_states import (PairState, StateError, pair_state, spin_half_pair_state,
                                    spin_one_pair_state)
from src.states.polarization import REST_FRAME_POLARIZATIONS, polarization_vectors


def random_momentum(rng, mass=1.0, scale=3.0):
    return Momentum.from_three_momentum(rng.normal(scale=scale, size=3), mass)


class TestPolarizationVectors(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.default_rng(7)

    def test_rest_frame_vectors(self):
        """At rest the polarization vectors are the standard spherical basis."""
        k = Momentum(1.0, 0.0, 0.0, 0.0)
        np.testing.assert_allclose(polarization_vectors(k), REST_FRAME_POLARIZATIONS, atol=0.0)

    def test_transverse_to_momentum(self):
        """Every polarization vector is Minkowski-orthogonal to k."""
        for _ in range(20):
            k = random_momentum(self.rng)
            for e in polarization_vectors(k):
                self.assertLess(abs(minkowski_dot(k, e)), 1e-12)

    def test_orthonormal(self):
        """e_sigma . e*_lambda = -delta for random momenta."""
        for _ in range(20):
            e = polarization_vectors(random_momentum(self.rng))
            np.testing.assert_allclose(e @ METRIC @ e.conj().T, -np.eye(3), atol=1e-11)


class TestSpinHalfState(unittest.TestCase):

    def test_rest_state_is_singlet(self):
        """At threshold the spin-1/2 state is the singlet."""
        state = spin_half_pair_state(*momenta_from_x(0.0))
        psi = state.normalized().coefficients
        singlet = np.array([[0.0, -1.0], [1.0, 0.0]]) / np.sqrt(2.0)
        np.testing.assert_allclose(psi, singlet, atol=1e-15)

    def test_cm_state_is_singlet_up_to_scale(self):
        """In the c.m. frame the spin-1/2 state stays a singlet."""
        psi = spin_half_pair_state(*cm_momenta(2.5)).normalized().coefficients
        ratio = psi[1, 0] / psi[0, 1]
        self.assertAlmostEqual(ratio, -1.0, places=12)
        self.assertAlmostEqual(abs(psi[0, 0]), 0.0, places=14)

    def test_exchange_antisymmetry(self):
        """Swapping the particles transposes the spin-1/2 state with a sign."""
        rng = np.random.default_rng(11)
        for _ in range(10):
            k, p = random_momentum(rng), random_momentum(rng)
            np.testing.assert_allclose(spin_half_pair_state(p, k).coefficients,
                                       -spin_half_pair_state(k, p).coefficients.T, atol=1e-12)


class TestSpinOneState(unittest.TestCase):

    def test_rest_state_is_antidiagonal(self):
        """At rest the spin-1 state is anti-diagonal (1, -1, 1)."""
        psi = spin_one_pair_state(*cm_momenta(0.0)).coefficients
        expected = np.array([[0, 0, 1], [0, -1, 0], [1, 0, 0]], dtype=complex)
        np.testing.assert_allclose(psi, expected, atol=1e-15)

    def test_exchange_symmetry(self):
        """Swapping the particles transposes the spin-1 state."""
        rng = np.random.default_rng(12)
        for _ in range(10):
            k, p = random_momentum(rng), random_momentum(rng)
            np.testing.assert_allclose(spin_one_pair_state(p, k).coefficients,
                                       spin_one_pair_state(k, p).coefficients.T, atol=1e-11)

    def test_rotation_covariance(self):
        """Rotating both momenta about z transforms psi by exp(-i phi S3) on each index."""
        rng = np.random.default_rng(13)
        for _ in range(10):
            k, p = random_momentum(rng), random_momentum(rng)
            phi = float(rng.uniform(0.0, 2.0 * np.pi))
            c, s = np.cos(phi), np.sin(phi)
            rz = np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])
            rk = Momentum.from_three_momentum(rz @ k.spatial)
            rp = Momentum.from_three_momentum(rz @ p.spatial)
            d = np.diag([np.exp(-1j * phi), 1.0, np.exp(1j * phi)])
            np.testing.assert_allclose(spin_one_pair_state(rk, rp).coefficients,
                                       d @ spin_one_pair_state(k, p).coefficients @ d.T,
                                       atol=1e-10)

    def test_momentum_along_y(self):
        """The conjugated contraction, not the plain one, gives the ket coefficients."""
        k = Momentum.from_three_momentum((0.0, 1.5, 0.0))
        p = Momentum.from_three_momentum((0.0, -1.5, 0.0))
        e_k, e_p = polarization_vectors(k), polarization_vectors(p)
        expected = e_k.conj() @ METRIC @ e_p.conj().T
        np.testing.assert_allclose(spin_one_pair_state(k, p).coefficients, expected, atol=1e-14)


class TestPairStateValidation(unittest.TestCase):

    def test_mass_mismatch(self):
        """The two particles must share a mass."""
        k = Momentum(1.0, 0.0, 0.0, 0.0, 1.0)
        p = Momentum(2.0, 0.0, 0.0, 0.0, 2.0)
        for spin in Spin:
            with self.subTest(spin=spin):
                with self.assertRaises(StateError):
                    pair_state(spin, k, p)

    def test_wrong_shape(self):
        """Coefficients must be s-dimensional square."""
        k = Momentum(1.0, 0.0, 0.0, 0.0)
        with self.assertRaises(StateError):
            PairState(Spin.HALF, k, k, np.eye(3, dtype=complex))

    def test_zero_coefficients(self):
        """A zero state is rejected."""
        k = Momentum(1.0, 0.0, 0.0, 0.0)
        with self.assertRaises(StateError):
            PairState(Spin.ONE, k, k, np.zeros((3, 3), dtype=complex))

    def test_normalized(self):
        """normalized() gives unit norm and keeps the spin."""
        state = pair_state("one", *momenta_from_x(1.7))
        self.assertAlmostEqual(state.normalized().norm_squared(), 1.0, places=14)
        self.assertIs(state.spin, Spin.ONE)

    def test_plain_vectors_rejected(self):
        """Plain tuples are not momenta."""
        with self.assertRaises(StateError):
            spin_half_pair_state((1.0, 0.0, 0.0, 0.0), (1.0, 0.0, 0.0, 0.0))


if __name__ == '__main__':
    unittest.main()

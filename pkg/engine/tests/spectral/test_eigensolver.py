"""Unit tests for the eigensolvers and their fixtures"""
import unittest
import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

import numpy as np

from services.spectral import (
    FIXTURES,
    fixture_adjacency,
    fixture_spectrum,
    jacobi_eigh,
    lapack_eigh,
    round_robin_pairs,
    symmetric_eigen,
)
from utils.errors import SpectralError


class TestRoundRobin(unittest.TestCase):

    def test_every_pair_once(self):
        for n in (2, 5, 8):
            rounds = round_robin_pairs(n)
            pairs = [(int(p), int(q)) for ps, qs in rounds for p, q in zip(ps, qs)]
            self.assertEqual(len(pairs), n * (n - 1) // 2)
            self.assertEqual(len(set(pairs)), len(pairs))
            self.assertTrue(all(p < q for p, q in pairs))

    def test_rounds_are_disjoint(self):
        for ps, qs in round_robin_pairs(7):
            touched = list(ps) + list(qs)
            self.assertEqual(len(touched), len(set(touched)))


class TestJacobi(unittest.TestCase):

    def test_matches_lapack(self):
        rng = np.random.default_rng(0)
        m = rng.normal(size=(30, 30))
        m = m + m.T
        jacobi, lapack = jacobi_eigh(m), lapack_eigh(m)
        np.testing.assert_allclose(jacobi.eigenvalues, lapack.eigenvalues, atol=1e-8)
        self.assertLess(jacobi.residual, 1e-8)
        self.assertGreater(jacobi.sweeps, 0)

    def test_converges_at_default_tolerance(self):
        rng = np.random.default_rng(0)
        m = rng.normal(size=(5, 5))
        m = m + m.T
        result = jacobi_eigh(m, max_sweeps=10)
        np.testing.assert_allclose(result.eigenvalues, lapack_eigh(m).eigenvalues, atol=1e-10)
        self.assertLessEqual(result.sweeps, 10)

    def test_widely_separated_diagonal(self):
        m = np.array([[1e6, 1e-3, 0.0], [1e-3, -1e6, 2e-3], [0.0, 2e-3, 5.0]])
        result = jacobi_eigh(m)
        self.assertTrue(np.all(np.isfinite(result.eigenvalues)))
        np.testing.assert_allclose(result.eigenvalues, lapack_eigh(m).eigenvalues, rtol=1e-12, atol=1e-9)

    def test_descending_order(self):
        values = jacobi_eigh(np.diag([1.0, 3.0, 2.0])).eigenvalues
        np.testing.assert_array_equal(values, [3.0, 2.0, 1.0])

    def test_fixtures(self):
        for name, (_, _, smallest) in FIXTURES.items():
            for m in (smallest, 8):
                computed = jacobi_eigh(fixture_adjacency(name, m)).eigenvalues
                np.testing.assert_allclose(computed, fixture_spectrum(name, m), atol=1e-8, err_msg=name)

    def test_small_inputs(self):
        self.assertEqual(jacobi_eigh(np.array([[2.0]])).eigenvalues.tolist(), [2.0])
        self.assertEqual(len(jacobi_eigh(np.zeros((0, 0))).eigenvalues), 0)

    def test_rejects_asymmetric(self):
        with self.assertRaises(SpectralError):
            jacobi_eigh(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_sweep_limit(self):
        with self.assertRaises(SpectralError):
            jacobi_eigh(fixture_adjacency("cycle", 10), max_sweeps=1)


class TestDispatch(unittest.TestCase):

    def test_auto_switches_on_size(self):
        m = fixture_adjacency("complete", 6)
        self.assertEqual(symmetric_eigen(m, solver="auto", jacobi_max_dim=10).solver, "jacobi")
        self.assertEqual(symmetric_eigen(m, solver="auto", jacobi_max_dim=5).solver, "lapack")

    def test_unknown_solver(self):
        with self.assertRaises(SpectralError):
            symmetric_eigen(np.eye(2), solver="power")


if __name__ == '__main__':
    unittest.main()

"""Unit tests for services.linalg"""
import unittest
import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

import numpy as np

from services.field import get_field
from services.linalg import (
    all_vectors,
    batch_dets,
    batch_ranks,
    det,
    dot,
    identity,
    inverse,
    matmul,
    nullspace,
    projective_points,
    rank,
    rref,
)
from utils.errors import FieldArithmeticError


class TestRowReduction(unittest.TestCase):

    def setUp(self):
        self.f = get_field(3)

    def test_rref_and_pivots(self):
        reduced, pivots = rref(self.f, [[0, 2, 1], [1, 1, 0]])
        np.testing.assert_array_equal(reduced, [[1, 0, 1], [0, 1, 2]])
        self.assertEqual(pivots, [0, 1])

    def test_rank_of_singular_matrix(self):
        self.assertEqual(rank(self.f, [[1, 2], [2, 1]]), 1)
        self.assertEqual(rank(self.f, np.zeros((0, 3), dtype=int)), 0)

    def test_det(self):
        self.assertEqual(det(self.f, [[1, 2], [2, 2]]), 1)
        self.assertEqual(det(self.f, [[1, 2], [2, 1]]), 0)
        self.assertEqual(det(self.f, [[0, 1], [1, 0]]), 2)

    def test_batch_agrees_with_single(self):
        mats = all_vectors(self.f, 4).reshape(-1, 2, 2)
        dets = batch_dets(self.f, mats)
        ranks = batch_ranks(self.f, mats)
        for m, d, r in zip(mats[::7], dets[::7], ranks[::7]):
            self.assertEqual(int(d), det(self.f, m))
            self.assertEqual(int(r), rank(self.f, m))

    def test_invertible_count(self):
        # |GL_2(F_3)| = (9 - 1)(9 - 3)
        dets = batch_dets(self.f, all_vectors(self.f, 4).reshape(-1, 2, 2))
        self.assertEqual(int(np.count_nonzero(dets)), 48)

    def test_det_over_f9(self):
        f9 = get_field(9)
        t = 3
        self.assertEqual(det(f9, [[t, 0], [0, t]]), f9.neg_table[1])


class TestProducts(unittest.TestCase):

    def setUp(self):
        self.f = get_field(3)

    def test_inverse(self):
        m = [[1, 2], [2, 2]]
        np.testing.assert_array_equal(matmul(self.f, m, inverse(self.f, m)), identity(2))

    def test_inverse_of_singular(self):
        with self.assertRaises(FieldArithmeticError):
            inverse(self.f, [[1, 2], [2, 1]])

    def test_nullspace(self):
        basis = nullspace(self.f, [[1, 2], [2, 1]])
        np.testing.assert_array_equal(basis, [[1, 1]])

    def test_matvec_and_dot(self):
        np.testing.assert_array_equal(matmul(self.f, [[1, 1], [0, 2]], [1, 2]), [0, 1])
        self.assertEqual(dot(self.f, [1, 1, 1], [1, 1, 1]), 0)


class TestVectorEnumeration(unittest.TestCase):

    def setUp(self):
        self.f = get_field(3)

    def test_all_vectors_lexicographic(self):
        vectors = all_vectors(self.f, 2)
        self.assertEqual(vectors.shape, (9, 2))
        np.testing.assert_array_equal(vectors[:4], [[0, 0], [0, 1], [0, 2], [1, 0]])

    def test_projective_points(self):
        points = projective_points(self.f, 3)
        self.assertEqual(len(points), 13)
        leading = [row[np.nonzero(row)[0][0]] for row in points]
        self.assertTrue(all(x == 1 for x in leading))


if __name__ == '__main__':
    unittest.main()

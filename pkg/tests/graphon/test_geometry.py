# -*- coding: utf-8 -*-
import sys
sys.path[0:0] = [""]

import random
import unittest
from fractions import Fraction

from hamgraphon import *

__all__ = ("RationalMatrixTest", "ConeTest")

F = Fraction

Z_CASE_A = [[0, 0, 1, 0],
            [0, 0, 1, 1],
            [0, 1, 1, 1],
            [1, 1, 1, 0]]


class RationalMatrixTest(unittest.TestCase):

    def test_shape_and_columns(self):
        matrix = RationalMatrix([[1, 2, 3], [4, 5, 6]])
        self.assertEqual(matrix.shape, (2, 3))
        self.assertEqual(matrix.column(1), (2, 5))
        self.assertEqual(matrix[1, 2], 6)
        self.assertEqual(matrix.transpose().to_lists(), [[1, 4], [2, 5], [3, 6]])
        self.assertEqual(RationalMatrix.from_columns([(1, 4), (2, 5), (3, 6)], 2),
                         matrix)

    def test_ragged_rows(self):
        self.assertRaises(ValidationError, RationalMatrix, [[1, 2], [3]])
        self.assertRaises(ValidationError, RationalMatrix.from_columns, [(1,)], 2)

    def test_empty_columns(self):
        """Ensure an m x 0 matrix keeps its row count.
        """
        matrix = RationalMatrix.from_columns([], 3)
        self.assertEqual(matrix.shape, (3, 0))
        self.assertEqual(rank(matrix), 0)
        self.assertEqual(matrix.dot([]), (0, 0, 0))

    def test_rank(self):
        self.assertEqual(rank(RationalMatrix(Z_CASE_A)), 4)
        self.assertEqual(rank(RationalMatrix([[1, 2], [2, 4]])), 1)
        self.assertEqual(rank(RationalMatrix([[0, 0], [0, 0]])), 0)
        self.assertEqual(rank(RationalMatrix([[F(1, 3), 1], [1, 3], [0, 1]])), 2)

    def test_dot(self):
        self.assertEqual(dot([1, F(1, 2)], [2, 4]), 4)
        self.assertRaises(ValidationError, dot, [1], [1, 2])
        self.assertEqual(RationalMatrix([[1, 1], [0, 1]]).dot([F(1, 2), 1]),
                         (F(3, 2), 1))


class ConeTest(unittest.TestCase):

    def setUp(self):
        self.z = RationalMatrix(Z_CASE_A)

    def test_interior_point(self):
        """Ensure the case-a concentration has the strict certificate
        (1/4, 1/8, 1/16, 1/8).
        """
        x = [F(1, 16), F(3, 16), F(5, 16), F(7, 16)]
        certificate = relative_interior_membership(self.z, x)
        self.assertEqual(certificate.coefficients,
                         (F(1, 4), F(1, 8), F(1, 16), F(1, 8)))
        self.assertTrue(certificate.strict)
        self.assertTrue(certificate.reconstructs(self.z, x))
        self.assertEqual(cone_membership(self.z, x).coefficients,
                         certificate.coefficients)

    def test_boundary_point(self):
        """Ensure the case-b concentration is in the cone but not in its
        relative interior.
        """
        x = [F(1, 8), F(2, 8), F(3, 8), F(2, 8)]
        certificate = cone_membership(self.z, x)
        self.assertEqual(certificate.coefficients, (0, F(1, 8), F(1, 8), F(1, 8)))
        self.assertFalse(certificate.strict)
        self.assertEqual(relative_interior_membership(self.z, x), None)

    def test_outside_point(self):
        """Ensure the case-c concentration is separated by a facet normal.
        """
        x = [F(5, 20), F(5, 20), F(6, 20), F(4, 20)]
        self.assertEqual(cone_membership(self.z, x), None)
        self.assertEqual(relative_interior_membership(self.z, x), None)
        g1 = [F(-1, 2), F(1, 2), F(-1, 2), F(1, 2)]
        self.assertTrue(dot(g1, x) < 0)

    def test_facet_normals(self):
        """Ensure every cycle vector lies on the nonnegative side of the
        facet normals.
        """
        normals = [[F(-1, 2), F(1, 2), F(-1, 2), F(1, 2)],
                   [0, -1, 1, 0],
                   [1, 0, 0, 0],
                   [-1, 1, 0, 0]]
        for g in normals:
            for column in self.z.columns:
                self.assertTrue(dot(g, column) >= 0)

    def test_lower_dimensional_cone(self):
        """Ensure relative interior is taken within the span of the cone.
        """
        z = RationalMatrix([[1, 0], [1, 0], [0, 1]])
        self.assertTrue(relative_interior_membership(z, [1, 1, 2]).strict)
        self.assertEqual(relative_interior_membership(z, [1, 1, 0]), None)
        self.assertNotEqual(cone_membership(z, [1, 1, 0]), None)
        self.assertEqual(cone_membership(z, [1, 2, 0]), None)

    def test_redundant_generators(self):
        z = RationalMatrix([[1, 0, 1], [0, 1, 1]])
        certificate = relative_interior_membership(z, [1, 1])
        self.assertTrue(certificate.strict)
        self.assertTrue(certificate.reconstructs(z, [1, 1]))
        self.assertEqual(relative_interior_membership(z, [1, 0]), None)

    def test_no_generators(self):
        z = RationalMatrix.from_columns([], 2)
        self.assertEqual(cone_membership(z, [0, 0]).coefficients, ())
        self.assertEqual(cone_membership(z, [1, 0]), None)

    def test_dimension_mismatch(self):
        self.assertRaises(ValidationError, cone_membership, self.z, [1, 2])

    def test_certificate_validation(self):
        self.assertRaises(ValidationError, ConeCertificate, [-1, 1])
        self.assertRaises(ValidationError, ConeCertificate, [0, 1], strict=True)
        self.assertEqual(ConeCertificate([F(1, 2)]).to_json(), ['1/2'])

    def test_random_cone_points(self):
        """Ensure positive combinations are recognised with certificates.
        """
        rng = random.Random(7)
        for _ in range(30):
            rows, cols = rng.randint(1, 5), rng.randint(1, 6)
            columns = [[rng.randint(0, 1) for _ in range(rows)]
                       for _ in range(cols)]
            z = RationalMatrix.from_columns(columns, rows)
            weights = [F(rng.randint(1, 5), rng.randint(1, 5)) for _ in range(cols)]
            x = z.dot(weights)
            self.assertTrue(cone_membership(z, x).reconstructs(z, x))
            if all(any(c) for c in columns):
                self.assertNotEqual(relative_interior_membership(z, x), None)


if __name__ == '__main__':
    unittest.main()

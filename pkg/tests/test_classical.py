#!/usr/bin/env python3
"""
Tests for exterior algebras, the Koszul generator and the antisymmetrisation oracle
"""

import os
import sys
import unittest

# Add src directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from algebra import abelian_lie_rinehart, heisenberg_lie_rinehart
from classical import ClassicalOracle, ExteriorAlgebra, permutation_sign
from instances import load_instance
from linalg import FreeVector
from reports import PASS

FIXTURES = os.path.join(os.path.dirname(__file__), '..', 'fixtures')


def failing(results):
    return [r.to_dict() for r in results if r.status != PASS]


class TestExteriorAlgebra(unittest.TestCase):
    """Test cases for ⋀ L of the Heisenberg algebra."""

    def setUp(self):
        self.exterior = ExteriorAlgebra(heisenberg_lie_rinehart())

    def test_permutation_sign(self):
        self.assertEqual(permutation_sign((0, 1, 2)), 1)
        self.assertEqual(permutation_sign((1, 0)), -1)
        self.assertEqual(permutation_sign((2, 0, 1)), 1)

    def test_monomials_are_normalized(self):
        E = self.exterior
        self.assertEqual(E.monomial((1, 0)), E.monomial((0, 1)).scale(-1))
        self.assertTrue(E.monomial((0, 0)).is_zero())
        self.assertEqual(len(E.basis(2)), 3)

    def test_wedge_is_antisymmetric(self):
        E = self.exterior
        e1, e2 = E.monomial((0,)), E.monomial((1,))
        self.assertEqual(E.wedge(e1, e2), E.monomial((0, 1)))
        self.assertEqual(E.wedge(e2, e1), E.monomial((0, 1)).scale(-1))

    def test_koszul_generator(self):
        E = self.exterior
        self.assertEqual(E.koszul_generator(E.monomial((0, 1))), E.monomial((2,)).scale(-1))
        self.assertTrue(E.koszul_generator(E.monomial((0,))).is_zero())

    def test_schouten_bracket_of_generators(self):
        E = self.exterior
        self.assertEqual(E.schouten_bracket(E.monomial((0,)), E.monomial((1,))), E.monomial((2,)))
        self.assertTrue(E.schouten_bracket(E.monomial((0,)), E.monomial((2,))).is_zero())


class TestAntisymmetrisation(unittest.TestCase):
    """Test cases for Alt : ⋀ L → cotor cochains of V L."""

    @classmethod
    def setUpClass(cls):
        cls.oracle = ClassicalOracle(heisenberg_lie_rinehart())

    def test_alt_in_low_degrees(self):
        E = self.oracle.exterior
        self.assertEqual(self.oracle.alt(E.from_base(FreeVector.basis('1'))), FreeVector.basis(('1',)))
        self.assertEqual(self.oracle.alt(E.monomial((0,))),
                         FreeVector.basis((('1', (1, 0, 0)), '1')))

    def test_alt_images_are_cocycles(self):
        E = self.oracle.exterior
        for p in range(3):
            for x in E.basis(p):
                self.assertTrue(self.oracle.cotor.beta(p, self.oracle.alt(x)).is_zero())


class TestClassicalOracle(unittest.TestCase):
    """Test cases for the full oracle on the abelian Lie algebra of rank 2."""

    @classmethod
    def setUpClass(cls):
        cls.instance = load_instance(os.path.join(FIXTURES, 'abelian_rank2.json'))
        cls.oracle = ClassicalOracle(cls.instance.lie, cls.instance.bialgebroid)

    def test_checks(self):
        results = self.oracle.checks(max_degree=2, bracket_degree=2)
        self.assertEqual(failing(results), [])
        ids = [r.id for r in results]
        self.assertIn('classical.alt_B', ids)
        self.assertIn('classical.weighted_cotor', ids)

    def test_weighted_cotor_dimensions(self):
        self.assertEqual(self.oracle.weighted_cotor_dimensions(0), [1])
        self.assertEqual(self.oracle.weighted_cotor_dimensions(1), [0, 2])
        self.assertEqual(self.oracle.weighted_cotor_dimensions(2), [0, 0, 1])

    def test_scalar_base_required(self):
        from algebra import truncated_polynomial_algebra
        oracle = ClassicalOracle(abelian_lie_rinehart(1, truncated_polynomial_algebra(['x'])))
        results = oracle.cotor_checks(max_degree=1)
        self.assertTrue(all(r.status != PASS for r in results))


if __name__ == '__main__':
    unittest.main()

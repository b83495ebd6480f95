#!/usr/bin/env python3
"""
Tests for the cap product, Lie derivative and Connes operator
"""

import os
import sys
import unittest

# Add src directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from calculus import Calculus, ChainOperator, graded_commutator, theta, xi
from coefficients import base_module
from complexes import arity_zero
from exceptions import PreconditionError
from instances import load_instance
from linalg import FreeVector
from reports import PASS

FIXTURES = os.path.join(os.path.dirname(__file__), '..', 'fixtures')


class TestSignFunctions(unittest.TestCase):

    def test_theta(self):
        self.assertEqual(theta(3, 2, 1), 3)
        self.assertEqual(theta(4, 1, 2), 0)

    def test_xi(self):
        self.assertEqual(xi(3, 2, 1), 1)
        self.assertEqual(xi(2, 3, 2), 4)


class TestChainOperators(unittest.TestCase):
    """Test cases for homogeneous operators and graded commutators."""

    def test_commutator_of_scalings(self):
        double = ChainOperator('2', 0, lambda n, c: c.scale(2))
        triple = ChainOperator('3', 0, lambda n, c: c.scale(3))
        c = FreeVector.basis(('1',))
        self.assertTrue(graded_commutator(double, triple)(0, c).is_zero())

    def test_odd_operators_anticommute_in_commutator(self):
        shift = ChainOperator('s', 1, lambda n, c: c)
        commutator = graded_commutator(shift, shift)
        self.assertEqual(commutator.degree, 2)
        self.assertEqual(commutator(0, FreeVector.basis('a')), FreeVector.basis('a').scale(2))

    def test_negative_degrees_vanish(self):
        lower = ChainOperator('d', -1, lambda n, c: c)
        self.assertTrue(lower(0, FreeVector.basis('a')).is_zero())


class TestCalculus(unittest.TestCase):
    """Test cases for the calculus of Aᵉ over the dual numbers with M = A."""

    @classmethod
    def setUpClass(cls):
        cls.instance = load_instance(os.path.join(FIXTURES, 'ae_dual_numbers.json'))
        cls.calculus = cls.instance.calculus()

    def test_cap_in_degree_zero(self):
        x = arity_zero(FreeVector.basis('x'))
        one = FreeVector.basis(('1',))
        self.assertEqual(self.calculus.cap(0, x, 0, one), FreeVector.basis(('x',)))
        self.assertTrue(self.calculus.cap(1, self.calculus.operad.one, 0, one).is_zero())

    def test_lie_of_mu_is_minus_b(self):
        chains = self.calculus.chains
        for n in range(3):
            for c in chains.basis(n).vectors:
                self.assertEqual(self.calculus.lie_derivative(2, self.calculus.operad.mu, n, c),
                                 -chains.b(n, c))

    def test_identities(self):
        results = self.calculus.checks(max_arity=1, max_degree=2)
        failing = [r.to_dict() for r in results if r.status != PASS]
        self.assertEqual(failing, [])
        ids = [r.id for r in results]
        self.assertIn('calculus.lie_connes', ids)
        self.assertIn('calculus.commutative_shortcut', ids)

    def test_needs_right_action(self):
        module = base_module(self.instance.bialgebroid)
        with self.assertRaises(PreconditionError):
            Calculus(module, self.calculus.operad)


if __name__ == '__main__':
    unittest.main()

#!/usr/bin/env python3
"""
Tests for Poisson structures, the shuffle product and the Koszul bracket
"""

import os
import sys
import unittest

# Add src directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from exceptions import StructureError
from instances import load_instance
from linalg import FreeVector
from poisson import (
    PoissonStructure, hochschild_cochain, hochschild_composition_checks, is_triangular,
    monomial_weight, poisson_boundary_check, shuffle_sign, tilde
)
from reports import PASS

FIXTURES = os.path.join(os.path.dirname(__file__), '..', 'fixtures')


def failing(results):
    return [r.to_dict() for r in results if r.status != PASS]


class TestTruncatedPolynomialPoisson(unittest.TestCase):
    """Test cases for the Euler bivector on Q[x,y]/(x²,y²)."""

    @classmethod
    def setUpClass(cls):
        cls.instance = load_instance(os.path.join(FIXTURES, 'truncated_polynomial.json'))
        cls.calculus = cls.instance.calculus()
        cls.operad = cls.calculus.operad
        cls.pi = cls.instance.poisson('pi')

    def test_biderivation_values(self):
        pi_tilde = tilde(self.operad, 2, self.pi.tau)
        self.assertEqual(pi_tilde('x', 'y'), FreeVector.basis('xy'))
        self.assertEqual(pi_tilde('y', 'x'), FreeVector.basis('xy', -1))
        self.assertTrue(pi_tilde('x', 'x').is_zero())

    def test_pi_is_triangular(self):
        certified, witness = is_triangular(self.operad, self.pi.tau)
        self.assertTrue(certified)
        self.assertIsNone(witness)

    def test_non_cocycle_is_rejected(self):
        def values(labels):
            return FreeVector.basis('1') if labels == ('x', 'y') else FreeVector.zero()

        tau = hochschild_cochain(self.operad, 2, values)
        certified, witness = is_triangular(self.operad, tau)
        self.assertFalse(certified)
        self.assertIn('δτ', witness)
        with self.assertRaises(StructureError):
            PoissonStructure(self.calculus, tau, name='bad')

    def test_differentials_square_to_zero(self):
        self.assertEqual(failing(self.pi.checks(max_degree=2, max_arity=1)), [])

    def test_explicit_boundary_formula(self):
        self.assertEqual(poisson_boundary_check(self.pi, max_degree=2).status, PASS)

    def test_shuffle_of_two_entries(self):
        u = FreeVector.basis(('1', ('x', '1')))
        v = FreeVector.basis(('1', ('y', '1')))
        product = self.pi.shuffle(1, u, 1, v)
        expected = FreeVector({('1', ('x', '1'), ('y', '1')): -1,
                               ('1', ('y', '1'), ('x', '1')): 1})
        self.assertEqual(product, expected)

    def test_koszul_bracket_is_antisymmetric(self):
        checks = {check.id: check for check in self.pi.koszul_checks(max_total_degree=2)}
        antisymmetry = checks['poisson.pi.koszul_antisymmetry']
        self.assertEqual(antisymmetry.status, PASS, antisymmetry.to_dict())
        self.assertEqual(antisymmetry.detail, 'holds at chain level')

    def test_shuffle_leibniz_rule(self):
        chains = self.calculus.chains
        result = {r.id: r for r in self.pi.checks(max_degree=3, max_arity=1)}['poisson.pi.shuffle_leibniz']
        self.assertEqual(result.status, PASS, result.witness)
        x = FreeVector.basis(('1', ('x', '1')))
        yy = chains.basis(2).vectors[-1]
        lhs = chains.b(3, self.pi.shuffle(1, x, 2, yy))
        rhs = self.pi.shuffle(0, chains.b(1, x), 2, yy) - self.pi.shuffle(1, x, 1, chains.b(2, yy))
        self.assertEqual(lhs, rhs)

    def test_shuffle_counts(self):
        uu = FreeVector.basis(('1', ('x', '1'), ('y', '1')))
        v = FreeVector.basis(('1', ('xy', '1')))
        self.assertEqual(len(self.pi.shuffle(2, uu, 1, v)), 3)

    def test_shuffle_with_degree_zero_is_product(self):
        a = FreeVector.basis(('x',))
        u = FreeVector.basis(('1', ('y', '1')))
        self.assertEqual(self.pi.shuffle(0, a, 1, u), FreeVector.basis(('x', ('y', '1'))))

    def test_second_order_defect_in_degree_zero(self):
        a = FreeVector.basis(('x',))
        b = FreeVector.basis(('y',))
        self.assertTrue(self.pi.second_order_defect(0, a, 0, b, 0, a).is_zero())

    def test_hochschild_insertion(self):
        results = hochschild_composition_checks(self.operad, max_arity=2, samples=4)
        self.assertEqual(failing(results), [])


class TestMultiplicationPoisson(unittest.TestCase):
    """Test cases for τ = μ, which reproduces the simplicial differentials."""

    @classmethod
    def setUpClass(cls):
        cls.instance = load_instance(os.path.join(FIXTURES, 'ae_dual_numbers.json'))
        cls.mu = cls.instance.poisson('mu')

    def test_b_mu_is_b(self):
        chains = self.mu.calculus.chains
        for n in range(1, 3):
            for c in chains.basis(n).vectors:
                self.assertEqual(self.mu.b_tau(n, c), chains.b(n, c))

    def test_beta_mu_is_delta(self):
        operad = self.mu.operad
        for phi in operad.elements(1):
            self.assertEqual(self.mu.beta_tau(1, phi), operad.complex.differential(1, phi))

    def test_bracket_vanishes_on_homology(self):
        self.assertEqual(self.mu.bracket_vanishes(max_total_degree=2).status, PASS)

    def test_koszul_identities(self):
        self.assertEqual(failing(self.mu.koszul_checks(max_total_degree=2)), [])

    def test_shuffle_is_a_derivation_for_b(self):
        chains = self.mu.calculus.chains
        x = FreeVector.basis(('1', ('1', '1')))
        y = FreeVector.basis(('1', ('x', '1'), ('x', '1')))
        self.assertTrue(chains.b(1, x).is_zero())
        lhs = chains.b(3, self.mu.shuffle(1, x, 2, y))
        self.assertFalse(lhs.is_zero())
        self.assertEqual(lhs, -self.mu.shuffle(1, x, 1, chains.b(2, y)))
        result = {r.id: r for r in self.mu.checks(max_degree=3, max_arity=1)}['poisson.mu.shuffle_leibniz']
        self.assertEqual(result.status, PASS, result.witness)


class TestHelpers(unittest.TestCase):

    def test_monomial_weight(self):
        self.assertEqual(monomial_weight('xy', 'x'), 1)
        self.assertEqual(monomial_weight('x^2y', 'x'), 2)
        self.assertEqual(monomial_weight('1', 'y'), 0)

    def test_shuffle_sign(self):
        self.assertEqual(shuffle_sign((0,)), 1)
        self.assertEqual(shuffle_sign((1,)), -1)
        self.assertEqual(shuffle_sign((1, 2)), 1)


if __name__ == '__main__':
    unittest.main()

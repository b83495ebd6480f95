#!/usr/bin/env python3
"""
Tests for the Hom and cotor operads with multiplication
"""

import os
import sys
import unittest

# Add src directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from algebra import cyclic_group_algebra
from bialgebroid import build_group
from coefficients import left_regular_module
from complexes import arity_zero
from exceptions import PreconditionError
from instances import load_instance
from linalg import FreeVector
from operad import CotorOperad, HomOperad, desuspend, sign
from reports import PASS

FIXTURES = os.path.join(os.path.dirname(__file__), '..', 'fixtures')


def failing(results):
    return [r.to_dict() for r in results if r.status != PASS]


class TestSigns(unittest.TestCase):

    def test_desuspend_and_sign(self):
        self.assertEqual(desuspend(3), 2)
        self.assertEqual(desuspend(0), -1)
        self.assertEqual(sign(3), -1)
        self.assertEqual(sign(-2), 1)


class TestHomOperad(unittest.TestCase):
    """Test cases for the operad on Hom cochains with values in A."""

    @classmethod
    def setUpClass(cls):
        cls.instance = load_instance(os.path.join(FIXTURES, 'ae_dual_numbers.json'))
        cls.operad = cls.instance.hom_operad()

    def test_construction(self):
        self.assertEqual(failing(self.operad.construction_checks), [])
        self.assertEqual(len(self.operad.elements(0)), 2)

    def test_relations(self):
        self.assertEqual(failing(self.operad.relation_checks(max_arity=2)), [])

    def test_structure(self):
        self.assertEqual(failing(self.operad.structure_checks(max_arity=2)), [])

    def test_mu_is_a_cocycle(self):
        self.assertTrue(self.operad.delta(2, self.operad.mu).is_zero())

    def test_cup_in_degree_zero_is_product(self):
        one = arity_zero(FreeVector.basis('1'))
        x = arity_zero(FreeVector.basis('x'))
        self.assertEqual(self.operad.cup(0, one, 0, x), x)
        self.assertTrue(self.operad.cup(0, x, 0, x).is_zero())

    def test_composition_indices(self):
        with self.assertRaises(ValueError):
            self.operad.comp(2, self.operad.mu, 0, 2, self.operad.mu)
        self.assertTrue(self.operad.comp(2, self.operad.mu, 3, 2, self.operad.mu).is_zero())
        self.assertTrue(self.operad.comp(0, self.operad.e, 1, 2, self.operad.mu).is_zero())

    def test_needs_braided_commutative_coefficients(self):
        c2 = build_group(cyclic_group_algebra(2))
        with self.assertRaises(PreconditionError):
            HomOperad(c2, left_regular_module(c2))


class TestCotorOperad(unittest.TestCase):
    """Test cases for the cyclic operad on cotor cochains."""

    @classmethod
    def setUpClass(cls):
        cls.instance = load_instance(os.path.join(FIXTURES, 'ae_dual_numbers.json'))
        cls.operad = cls.instance.cotor_operad()

    def test_relations(self):
        self.assertEqual(failing(self.operad.relation_checks(max_arity=2)), [])

    def test_structure(self):
        self.assertEqual(failing(self.operad.structure_checks(max_arity=2)), [])

    def test_cyclic_relations(self):
        results = self.operad.cyclic_checks(max_arity=2)
        self.assertEqual(failing(results), [])
        self.assertIn('cotor.tau_mu', [r.id for r in results])

    def test_unit_elements(self):
        self.assertEqual(self.operad.mu, FreeVector.basis((('1', '1'), ('1', '1'), '1')))
        self.assertEqual(self.operad.e, FreeVector.basis(('1',)))

    def test_needs_coaction(self):
        c2 = build_group(cyclic_group_algebra(2))
        with self.assertRaises(PreconditionError):
            CotorOperad(c2, left_regular_module(c2))


if __name__ == '__main__':
    unittest.main()

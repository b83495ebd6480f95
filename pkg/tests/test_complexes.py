#!/usr/bin/env python3
"""
Tests for the chain, cotor and Hom complexes
"""

import os
import sys
import unittest

# Add src directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from algebra import cyclic_group_algebra, heisenberg_lie_rinehart, truncated_polynomial_algebra
from bialgebroid import build_ae, build_group, build_vl
from coefficients import (
    base_module, counit_right_action, enveloping_right_action, left_regular_module,
    trivial_module
)
from complexes import (
    ChainComplex, CotorComplex, HomComplex, cosimplicial_checks, hom_checks, simplicial_checks
)
from exceptions import PreconditionError
from linalg import FreeVector
from reports import PASS


def all_pass(testcase, results):
    failing = [r.to_dict() for r in results if r.status != PASS]
    testcase.assertEqual(failing, [])


class TestChainComplex(unittest.TestCase):
    """Test cases for C_•(U, M) over the enveloping algebra of the dual numbers."""

    def setUp(self):
        self.ae = build_ae(truncated_polynomial_algebra(['x']))
        self.module = base_module(self.ae, right_action=enveloping_right_action(self.ae))
        self.chains = ChainComplex(self.ae, self.module)

    def test_degree_one_faces(self):
        c = FreeVector.basis(('1', ('x', '1')))
        expected = FreeVector.basis(('x',))
        self.assertEqual(self.chains.face(1, 1, c), expected)
        self.assertEqual(self.chains.face(0, 1, c), expected)
        self.assertTrue(self.chains.b(1, c).is_zero())

    def test_face_index_range(self):
        c = FreeVector.basis(('1', ('x', '1')))
        with self.assertRaises(ValueError):
            self.chains.face(2, 1, c)

    def test_normalized_basis_drops_units(self):
        labels = [next(v.terms())[0] for v in self.chains.basis(1).vectors]
        self.assertEqual(sorted(labels), sorted([('1', ('x', '1')), ('x', ('x', '1'))]))

    def test_simplicial_identities(self):
        results = simplicial_checks(self.chains, max_degree=4, limit=None)
        all_pass(self, results)
        self.assertEqual(len(results), 7)

    def test_pbw_carrier_is_rejected(self):
        vl = build_vl(heisenberg_lie_rinehart())
        module = base_module(vl, right_action=counit_right_action(vl))
        with self.assertRaises(PreconditionError):
            simplicial_checks(ChainComplex(vl, module))


class TestCotorComplex(unittest.TestCase):
    """Test cases for the cosimplicial cotor complex."""

    def test_enveloping_identities(self):
        ae = build_ae(truncated_polynomial_algebra(['x']))
        module = base_module(ae, right_action=enveloping_right_action(ae))
        all_pass(self, cosimplicial_checks(CotorComplex(ae, module), max_degree=4, limit=None))

    def test_group_identities(self):
        c2 = build_group(cyclic_group_algebra(2))
        all_pass(self, cosimplicial_checks(CotorComplex(c2, trivial_module(c2)), max_degree=4))

    def test_beta_in_degree_zero(self):
        c2 = build_group(cyclic_group_algebra(2))
        cotor = CotorComplex(c2, trivial_module(c2))
        z = FreeVector.basis(('1',))
        # δ_0 = (1, n) and δ_1 = n₍₋₁₎ ⊗ n₍₀₎ = (1, n) cancel
        self.assertTrue(cotor.beta(0, z).is_zero())

    def test_needs_coaction(self):
        c2 = build_group(cyclic_group_algebra(2))
        with self.assertRaises(PreconditionError):
            CotorComplex(c2, left_regular_module(c2))

    def test_codegeneracy_in_degree_zero(self):
        c2 = build_group(cyclic_group_algebra(2))
        cotor = CotorComplex(c2, trivial_module(c2))
        with self.assertRaises(ValueError):
            cotor.codegeneracy(0, 0, FreeVector.basis(('1',)))


class TestHomComplex(unittest.TestCase):
    """Test cases for Hom cochains."""

    def test_delta_square(self):
        c2 = build_group(cyclic_group_algebra(2))
        all_pass(self, hom_checks(HomComplex(c2, trivial_module(c2)), max_degree=2))

    def test_enveloping_delta_square(self):
        ae = build_ae(truncated_polynomial_algebra(['x']))
        all_pass(self, hom_checks(HomComplex(ae, base_module(ae)), max_degree=2))

    def test_normalized_domain(self):
        c2 = build_group(cyclic_group_algebra(2))
        hom = HomComplex(c2, trivial_module(c2))
        self.assertEqual(hom.domain_labels(0), [()])
        self.assertEqual(hom.domain_labels(1), [('g',)])


if __name__ == '__main__':
    unittest.main()

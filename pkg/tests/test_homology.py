#!/usr/bin/env python3
"""
Tests for exact homology computations
"""

import os
import random
import sys
import unittest

# Add src directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from algebra import cyclic_group_algebra, truncated_polynomial_algebra
from bialgebroid import build_ae, build_group
from coefficients import base_module, enveloping_right_action, trivial_module
from complexes import ChainComplex, DegreeBasis, HomComplex
from exceptions import PreconditionError, ResourceGuardError
from homology import (
    ConnesBicomplex, MixedTotalComplex, compare_tables, homology_table, induced_operation,
    normalization_check, representative_independence
)
from linalg import FreeVector
from reports import PASS


class ZeroComplex:
    """Two basis vectors in every degree and no differential."""

    step = -1
    name = 'zero'

    def basis(self, n):
        return DegreeBasis.from_labels([(n, 'a'), (n, 'b')])

    def differential(self, n, v):
        return FreeVector.zero()


def dual_numbers_chains(normalized=True):
    ae = build_ae(truncated_polynomial_algebra(['x']))
    module = base_module(ae, right_action=enveloping_right_action(ae))
    return ChainComplex(ae, module, normalized=normalized)


class TestHomologyTables(unittest.TestCase):
    """Test cases for dimension tables against known values."""

    @classmethod
    def setUpClass(cls):
        cls.chains = dual_numbers_chains()
        cls.result = homology_table(cls.chains, max_degree=4)

    def test_dual_numbers_hochschild_homology(self):
        self.assertEqual(self.result.table(), [2, 1, 1, 1, 1])

    def test_group_cohomology_of_c2(self):
        c2 = build_group(cyclic_group_algebra(2))
        result = homology_table(HomComplex(c2, trivial_module(c2)), max_degree=2)
        self.assertEqual(result.table(), [1, 0, 0])

    def test_zero_differential(self):
        result = homology_table(ZeroComplex(), max_degree=3)
        self.assertEqual(result.table(), [2, 2, 2, 2])
        self.assertEqual(result.to_dict()['chain_dimensions'], [2, 2, 2, 2])

    def test_guard(self):
        with self.assertRaises(ResourceGuardError):
            homology_table(dual_numbers_chains(), max_degree=2, guard=1)

    def test_normalization_is_quasi_isomorphism(self):
        check = normalization_check(dual_numbers_chains(), dual_numbers_chains(False), 2)
        self.assertEqual(check.status, PASS)
        self.assertEqual(check.id, 'homology.normalization.chain')


class TestBoundaries(unittest.TestCase):
    """Test cases for boundary membership and class coordinates."""

    @classmethod
    def setUpClass(cls):
        cls.chains = dual_numbers_chains()
        cls.result = homology_table(cls.chains, max_degree=3)

    def test_boundary_membership(self):
        # b(1, x⊗1, x⊗1) is a multiple of (x, x⊗1) by weight
        boundary = FreeVector.basis(('x', ('x', '1')))
        cycle = FreeVector.basis(('1', ('x', '1')))
        self.assertTrue(self.result.is_boundary(1, boundary))
        self.assertFalse(self.result.is_boundary(1, cycle))

    def test_boundary_witness(self):
        boundary = FreeVector.basis(('x', ('x', '1')))
        witness = self.result.boundary_witness(1, boundary)
        self.assertIsNotNone(witness)
        self.assertEqual(self.chains.differential(2, witness), boundary)
        self.assertIsNone(self.result.boundary_witness(1, FreeVector.basis(('1', ('x', '1')))))

    def test_class_coordinates(self):
        cycle = FreeVector.basis(('1', ('x', '1')))
        coords = self.result.class_coordinates(1, cycle)
        self.assertEqual(len(coords), 1)
        self.assertNotEqual(coords[0], 0)
        shifted = cycle + FreeVector.basis(('x', ('x', '1')))
        self.assertEqual(self.result.class_coordinates(1, shifted), coords)

    def test_non_cycle_is_rejected(self):
        chain = FreeVector.basis(('1', ('x', '1'), ('x', '1')))
        self.assertFalse(self.result.is_cycle(2, chain))
        with self.assertRaises(PreconditionError):
            self.result.class_coordinates(2, chain)

    def test_degree_out_of_range(self):
        with self.assertRaises(PreconditionError):
            self.result.is_boundary(7, FreeVector.zero())

    def test_induced_operation_is_well_defined(self):
        def double(v):
            return v.scale(2)

        cycle = FreeVector.basis(('1', ('x', '1')))
        inputs = [(self.result, 1, cycle)]
        coords = induced_operation(double, inputs, self.result, 1)
        self.assertEqual(coords, [2 * c for c in self.result.class_coordinates(1, cycle)])
        self.assertIsNone(representative_independence(double, inputs, self.result, 1,
                                                      random.Random(0)))


class TestCyclicHomology(unittest.TestCase):
    """Test cases for the mixed total complex and Connes' bicomplex."""

    def test_mixed_total_matches_bicomplex(self):
        normalized = dual_numbers_chains()
        mixed = homology_table(MixedTotalComplex(normalized, normalized.B), max_degree=3)
        connes = homology_table(ConnesBicomplex(dual_numbers_chains(False)), max_degree=3)
        check = compare_tables('cyclic.connes_vs_mixed', 'HC', mixed, connes)
        self.assertEqual(check.status, PASS, check.witness)
        self.assertEqual(mixed.table()[0], 2)

    def test_bicomplex_needs_unnormalized_chains(self):
        with self.assertRaises(PreconditionError):
            ConnesBicomplex(dual_numbers_chains())


if __name__ == '__main__':
    unittest.main()

#!/usr/bin/env python3
"""
Tests for algebra carriers and Lie-Rinehart enveloping algebras
"""

import os
import sys
import unittest

# Add src directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from algebra import (
    LieRinehartAlgebra, PBWCarrier, StructureConstantAlgebra, cyclic_group_algebra,
    dual_numbers_lie_rinehart, enveloping_algebra, heisenberg_lie_rinehart,
    truncated_polynomial_algebra
)
from exceptions import PreconditionError, StructureError
from linalg import FreeVector


def upper_triangular():
    """Upper triangular 2x2 matrices: associative but not commutative."""
    table = {
        ('e11', 'e11'): FreeVector.basis('e11'),
        ('e11', 'e12'): FreeVector.basis('e12'),
        ('e12', 'e22'): FreeVector.basis('e12'),
        ('e22', 'e22'): FreeVector.basis('e22'),
    }
    return table, FreeVector({'e11': 1, 'e22': 1})


class TestStructureConstantAlgebra(unittest.TestCase):
    """Test cases for algebras given by multiplication tables."""

    def test_truncated_polynomial_labels(self):
        algebra = truncated_polynomial_algebra(['x', 'y'])
        self.assertEqual(algebra.basis(), ['1', 'x', 'y', 'xy'])
        self.assertEqual(algebra.multiply_basis('x', 'y'), FreeVector.basis('xy'))
        self.assertTrue(algebra.multiply_basis('x', 'x').is_zero())
        self.assertTrue(algebra.commutative)

    def test_enveloping_product(self):
        ae = enveloping_algebra(truncated_polynomial_algebra(['x']))
        self.assertEqual(ae.dimension, 4)
        product = ae.multiply_basis(('x', '1'), ('1', 'x'))
        self.assertEqual(product, FreeVector.basis(('x', 'x')))
        self.assertEqual(ae.unit(), FreeVector.basis(('1', '1')))

    def test_cyclic_group(self):
        algebra = cyclic_group_algebra(3)
        self.assertEqual(algebra.basis(), ['e', 'g', 'g^2'])
        self.assertEqual(algebra.multiply_basis('g', 'g^2'), FreeVector.basis('e'))

    def test_noncommutative_detected(self):
        table, unit = upper_triangular()
        algebra = StructureConstantAlgebra('T2', ['e11', 'e12', 'e22'], table, unit)
        self.assertFalse(algebra.commutative)

    def test_false_commutative_declaration(self):
        table, unit = upper_triangular()
        with self.assertRaises(StructureError):
            StructureConstantAlgebra('T2', ['e11', 'e12', 'e22'], table, unit,
                                     commutative=True)

    def test_unit_law_failure(self):
        table = {('1', '1'): FreeVector.basis('1')}
        with self.assertRaises(StructureError) as ctx:
            StructureConstantAlgebra('broken', ['1', 'a'], table, FreeVector.basis('1'))
        self.assertIn('Unit law', str(ctx.exception))

    def test_undeclared_label(self):
        with self.assertRaises(StructureError):
            StructureConstantAlgebra('broken', ['1'], {('1', '1'): FreeVector.basis('z')},
                                     FreeVector.basis('1'))

    def test_validation_dimension_guard(self):
        table, unit = upper_triangular()
        with self.assertRaises(PreconditionError):
            StructureConstantAlgebra('T2', ['e11', 'e12', 'e22'], table, unit, max_dim=2)


class TestLieRinehart(unittest.TestCase):
    """Test cases for Lie-Rinehart algebras and their PBW carriers."""

    def test_heisenberg_bracket(self):
        lie = heisenberg_lie_rinehart()
        self.assertEqual(lie.bracket(lie.generator(0), lie.generator(1)), lie.generator(2))
        self.assertEqual(lie.bracket(lie.generator(1), lie.generator(0)),
                         lie.generator(2).scale(-1))

    def test_heisenberg_straightening(self):
        carrier = PBWCarrier(heisenberg_lie_rinehart())
        e2e1 = carrier.word_product([1, 0])
        expected = FreeVector({('1', (1, 1, 0)): 1, ('1', (0, 0, 1)): -1})
        self.assertEqual(e2e1, expected)
        self.assertEqual(carrier.word_product([0, 1]), FreeVector.basis(('1', (1, 1, 0))))

    def test_anchor_moves_past_base(self):
        lie = dual_numbers_lie_rinehart()
        carrier = PBWCarrier(lie)
        x = carrier.from_base(FreeVector.basis('x'))
        product = carrier.multiply(carrier.generator(0), x)
        self.assertEqual(product, FreeVector({('x', (1, 0)): 1, ('x', (0, 0)): 1}))

    def test_character_right_action(self):
        lie = dual_numbers_lie_rinehart()
        one = FreeVector.basis('1')
        x = FreeVector.basis('x')
        # 1 ⊲ X₁ = ∂X₁ = 1, x ⊲ X₁ = x − x = 0
        self.assertEqual(lie.right_action_generator(one, 0), one)
        self.assertTrue(lie.right_action_generator(x, 0).is_zero())

    def test_pbw_is_infinite(self):
        carrier = PBWCarrier(heisenberg_lie_rinehart())
        self.assertFalse(carrier.is_finite)
        with self.assertRaises(PreconditionError):
            carrier.basis()
        self.assertEqual(len(carrier.basis_up_to(1)), 4)

    def test_anchor_must_be_derivation(self):
        base = truncated_polynomial_algebra(['x'])
        with self.assertRaises(StructureError) as ctx:
            LieRinehartAlgebra(base, ['X'], anchors={(0, 'x'): FreeVector.basis('1')})
        self.assertIn('derivation', str(ctx.exception))

    def test_noncommutative_base_rejected(self):
        table, unit = upper_triangular()
        base = StructureConstantAlgebra('T2', ['e11', 'e12', 'e22'], table, unit)
        with self.assertRaises(StructureError):
            LieRinehartAlgebra(base, ['X'])


if __name__ == '__main__':
    unittest.main()

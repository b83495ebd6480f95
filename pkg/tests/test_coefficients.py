#!/usr/bin/env python3
"""
Tests for coefficient modules and their classification flags
"""

import os
import sys
import unittest

# Add src directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from algebra import cyclic_group_algebra, truncated_polynomial_algebra
from bialgebroid import build_ae, build_group
from coefficients import (
    adjoint_module, base_module, bimodule_action, counit_right_action, enveloping_right_action,
    induced_right_action, left_regular_module, module_checks, right_character, trivial_module,
    twisted_base_module, validate_ayd, validate_yd
)
from exceptions import PreconditionError
from instances import load_instance
from linalg import FreeVector
from operad import HomOperad
from reports import FAIL, SKIPPED

FIXTURES = os.path.join(os.path.dirname(__file__), '..', 'fixtures')


class TestBaseModule(unittest.TestCase):
    """Test cases for A as a module and comodule over Aᵉ."""

    def setUp(self):
        self.ae = build_ae(truncated_polynomial_algebra(['x']))
        self.module = base_module(self.ae, right_action=enveloping_right_action(self.ae))

    def test_actions(self):
        one = FreeVector.basis('1')
        self.assertEqual(self.module.act_left(FreeVector.basis(('1', 'x')), one),
                         FreeVector.basis('x'))
        self.assertEqual(self.module.act_right(one, FreeVector.basis(('x', '1'))),
                         FreeVector.basis('x'))
        self.assertEqual(self.module.coaction('x'),
                         FreeVector.basis((('x', '1'), '1')))

    def test_bimodule_action(self):
        one = FreeVector.basis('1')
        x = FreeVector.basis('x')
        self.assertEqual(bimodule_action(self.module, x, one, one), x)
        self.assertTrue(bimodule_action(self.module, x, x, one).is_zero())

    def test_flags(self):
        flags, checks = module_checks(self.module)
        self.assertTrue(flags.left_module)
        self.assertTrue(flags.right_module)
        self.assertTrue(flags.comodule)
        self.assertTrue(flags.braided_commutative_yd_algebra)
        self.assertTrue(flags.sayd)
        self.assertFalse(any(check.status == FAIL for check in checks))
        self.assertIn('A.left_module', [check.id for check in checks])

    def test_base_is_braided_commutative_yd(self):
        flags = validate_yd(base_module(self.ae))
        self.assertTrue(flags.is_yd)
        self.assertTrue(flags.is_braided_commutative)
        self.assertTrue(flags.braided_commutative_yd_algebra)

    def test_right_character(self):
        character = right_character(self.module)
        self.assertEqual(character(FreeVector.basis(('x', '1'))), FreeVector.basis('x'))
        self.assertEqual(character(FreeVector.basis(('1', '1'))), FreeVector.basis('1'))

    def test_induced_right_action_matches_enveloping(self):
        induced = induced_right_action(base_module(self.ae), self.module)
        one = FreeVector.basis('1')
        x = FreeVector.basis('x')
        self.assertEqual(induced.act_right(one, FreeVector.basis(('x', '1'))), x)
        self.assertEqual(induced.act_right(x, FreeVector.basis(('1', 'x'))).coeff('x'), 0)
        for u in self.ae.carrier.basis():
            self.assertEqual(induced.act_right(x, FreeVector.basis(u)),
                             self.module.act_right(x, FreeVector.basis(u)))
        self.assertTrue(validate_ayd(induced).sayd)

    def test_missing_action_is_a_precondition(self):
        plain = base_module(self.ae)
        self.assertFalse(plain.has_right_action)
        self.assertIsNone(module_checks(plain)[0].right_module)
        with self.assertRaises(PreconditionError):
            plain.act_right(FreeVector.basis('1'), FreeVector.basis(('1', '1')))
        with self.assertRaises(PreconditionError):
            validate_ayd(plain)


class TestHopfAlgebraModules(unittest.TestCase):
    """Test cases for coefficients over the group algebra of C2."""

    def setUp(self):
        self.c2 = build_group(cyclic_group_algebra(2))

    def test_trivial_module_is_sayd(self):
        flags = validate_ayd(trivial_module(self.c2))
        self.assertTrue(flags.is_ayd)
        self.assertTrue(flags.is_stable)

    def test_counit_action_on_base(self):
        module = base_module(self.c2, right_action=counit_right_action(self.c2))
        flags, _ = module_checks(module)
        self.assertTrue(flags.sayd)

    def test_adjoint_action_of_abelian_group(self):
        module = adjoint_module(self.c2)
        g = FreeVector.basis('g')
        self.assertEqual(module.act_left(g, g), g)
        flags, _ = module_checks(module)
        self.assertTrue(flags.is_yd)

    def test_adjoint_is_braided_commutative_yd_algebra(self):
        flags = validate_yd(adjoint_module(self.c2))
        self.assertTrue(flags.braided_commutative_yd_algebra)
        with self.assertRaises(PreconditionError):
            validate_yd(left_regular_module(self.c2))

    def test_induced_action_on_adjoint(self):
        base = base_module(self.c2, right_action=counit_right_action(self.c2))
        induced = induced_right_action(adjoint_module(self.c2), base)
        for n in induced.basis():
            self.assertEqual(induced.act_right(FreeVector.basis(n), FreeVector.basis('e')), FreeVector.basis(n))
            self.assertEqual(induced.act_right(FreeVector.basis(n), FreeVector.basis('g')), FreeVector.basis(n))
        self.assertTrue(validate_ayd(induced).is_ayd)

    def test_induced_action_needs_yd_module(self):
        base = base_module(self.c2, right_action=counit_right_action(self.c2))
        with self.assertRaises(PreconditionError):
            induced_right_action(left_regular_module(self.c2), base)

    def test_left_regular_module(self):
        module = left_regular_module(self.c2)
        g = FreeVector.basis('g')
        self.assertEqual(module.act_left(g, g), FreeVector.basis('e'))
        self.assertFalse(module.has_coaction)

    def test_twisted_base_is_not_a_comodule_algebra(self):
        module = twisted_base_module(self.c2, 'g')
        self.assertEqual(module.coaction('1'), FreeVector.basis(('g', '1')))
        flags, _ = module_checks(module)
        self.assertTrue(flags.comodule)
        self.assertFalse(flags.is_comodule_algebra)
        with self.assertRaises(PreconditionError):
            HomOperad(self.c2, module)

    def test_trivial_module_needs_scalar_base(self):
        ae = build_ae(truncated_polynomial_algebra(['x']))
        with self.assertRaises(PreconditionError):
            trivial_module(ae)


class TestSweedlerModules(unittest.TestCase):
    """Test cases for the counit module over Sweedler's four-dimensional Hopf algebra."""

    @classmethod
    def setUpClass(cls):
        cls.instance = load_instance(os.path.join(FIXTURES, 'sweedler.json'))
        cls.base = cls.instance.coefficient('A')

    def test_counit_module_is_not_ayd(self):
        flags, checks = module_checks(self.base)
        self.assertTrue(flags.right_module)
        self.assertFalse(flags.is_ayd)
        by_id = {check.id: check for check in checks}
        self.assertEqual(by_id['A.ayd'].status, SKIPPED)
        self.assertIsNotNone(by_id['A.ayd'].witness)
        self.assertFalse(any(check.status == FAIL for check in checks))

    def test_induced_action_checks_base_first(self):
        with self.assertRaises(PreconditionError) as ctx:
            induced_right_action(left_regular_module(self.instance.bialgebroid), self.base)
        self.assertIn('anti Yetter', str(ctx.exception))


if __name__ == '__main__':
    unittest.main()

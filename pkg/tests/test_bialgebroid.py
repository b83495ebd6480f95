#!/usr/bin/env python3
"""
Tests for bialgebroid builders and axiom validation
"""

import os
import sys
import unittest

# Add src directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from algebra import cyclic_group_algebra, heisenberg_lie_rinehart, truncated_polynomial_algebra
from bialgebroid import (
    antipode_from_character, build_ae, build_group, build_hopf, build_vl, check_antipode,
    ensure_finite, validate_bialgebroid, validate_hopf
)
from coefficients import base_module, counit_right_action, enveloping_right_action, right_character
from exceptions import PreconditionError, StructureError
from instances import load_instance
from linalg import FreeVector, tensor
from reports import FAIL, PASS, SKIPPED

FIXTURES = os.path.join(os.path.dirname(__file__), '..', 'fixtures')


def statuses(results):
    return {result.id: result.status for result in results}


class TestBuilders(unittest.TestCase):
    """Test cases for the structure maps of the built-in families."""

    def setUp(self):
        self.ae = build_ae(truncated_polynomial_algebra(['x']))

    def test_enveloping_structure_maps(self):
        x = FreeVector.basis('x')
        self.assertEqual(self.ae.s(x), FreeVector.basis(('x', '1')))
        self.assertEqual(self.ae.t(x), FreeVector.basis(('1', 'x')))
        self.assertEqual(self.ae.coproduct(('x', 'x')),
                         tensor(FreeVector.basis(('x', '1')), FreeVector.basis(('1', 'x'))))
        self.assertTrue(self.ae.counit(('x', 'x')).is_zero())
        self.assertEqual(self.ae.translation(('1', 'x')),
                         tensor(FreeVector.basis(('1', '1')), FreeVector.basis(('x', '1'))))

    def test_counit_action_on_base(self):
        x = FreeVector.basis('x')
        self.assertEqual(self.ae.counit_action(FreeVector.basis(('1', 'x')), x).coeff('x'), 0)
        one = FreeVector.basis('1')
        self.assertEqual(self.ae.counit_action(FreeVector.basis(('1', 'x')), one), x)

    def test_iterated_coproduct(self):
        legs = self.ae.iterated_coproduct(FreeVector.basis(('x', 'x')), 3)
        self.assertEqual(len(legs), 1)
        label, _ = next(legs.terms())
        self.assertEqual(len(label), 3)

    def test_group_is_grouplike(self):
        c2 = build_group(cyclic_group_algebra(2))
        self.assertEqual(c2.coproduct('g'), FreeVector.basis(('g', 'g')))
        self.assertEqual(c2.translation('g'), FreeVector.basis(('g', 'g')))

    def test_bad_antipode_rejected(self):
        algebra = cyclic_group_algebra(2)
        coproduct = {g: FreeVector.basis((g, g)) for g in algebra.basis()}
        counit = {g: 1 for g in algebra.basis()}
        antipode = {'e': FreeVector.basis('e'), 'g': FreeVector.basis('e')}
        with self.assertRaises(StructureError):
            build_hopf(algebra, coproduct, counit, antipode)

    def test_pbw_coproduct_is_primitive(self):
        vl = build_vl(heisenberg_lie_rinehart())
        one = ('1', (0, 0, 0))
        e1 = ('1', (1, 0, 0))
        self.assertEqual(vl.coproduct(e1), FreeVector({(e1, one): 1, (one, e1): 1}))
        self.assertTrue(vl.counit(e1).is_zero())
        with self.assertRaises(PreconditionError):
            ensure_finite(vl, 'Dimension count')


class TestAntipode(unittest.TestCase):
    """Test cases for antipodes built from right characters."""

    def test_enveloping_antipode_is_the_flip(self):
        ae = build_ae(truncated_polynomial_algebra(['x']))
        character = right_character(base_module(ae, right_action=enveloping_right_action(ae)))
        antipode = antipode_from_character(ae, character)
        self.assertEqual(antipode(FreeVector.basis(('x', '1'))), FreeVector.basis(('1', 'x')))
        self.assertEqual(antipode(FreeVector.basis(('1', '1'))), FreeVector.basis(('1', '1')))
        self.assertTrue(all(s == PASS for s in statuses(check_antipode(ae, antipode)).values()))

    def test_group_antipode_from_counit(self):
        c2 = build_group(cyclic_group_algebra(2))
        character = right_character(base_module(c2, right_action=counit_right_action(c2)))
        antipode = antipode_from_character(c2, character)
        self.assertEqual(antipode(FreeVector.basis('g')), FreeVector.basis('g'))
        self.assertEqual(set(statuses(check_antipode(c2, antipode))),
                         {'antipode.anti_multiplicative', 'antipode.involution'})

    def test_antipode_of_order_four_is_recorded(self):
        hopf = load_instance(os.path.join(FIXTURES, 'sweedler.json')).bialgebroid
        character = right_character(base_module(hopf, right_action=counit_right_action(hopf)))
        antipode = antipode_from_character(hopf, character)
        self.assertEqual(antipode(FreeVector.basis('x')), -FreeVector.basis('gx'))
        results = {result.id: result for result in check_antipode(hopf, antipode)}
        self.assertEqual(results['antipode.anti_multiplicative'].status, PASS)
        self.assertEqual(results['antipode.involution'].status, SKIPPED)
        self.assertIn("'x'", results['antipode.involution'].witness)


class TestValidation(unittest.TestCase):
    """Test cases for axiom checks with witnesses."""

    def test_enveloping_passes(self):
        ae = build_ae(truncated_polynomial_algebra(['x']))
        results = validate_bialgebroid(ae) + validate_hopf(ae)
        self.assertTrue(all(result.status == PASS for result in results),
                        [r.to_dict() for r in results if r.status != PASS])
        self.assertIn('hopf.sch9', statuses(results))

    def test_group_algebra_passes(self):
        c2 = build_group(cyclic_group_algebra(2))
        results = validate_bialgebroid(c2) + validate_hopf(c2)
        self.assertTrue(all(result.status == PASS for result in results))

    def test_pbw_passes_up_to_degree(self):
        vl = build_vl(heisenberg_lie_rinehart())
        results = validate_bialgebroid(vl, pbw_degree=2) + validate_hopf(vl, pbw_degree=2)
        self.assertTrue(all(result.status == PASS for result in results),
                        [r.to_dict() for r in results if r.status != PASS])

    def test_corrupted_coproduct_fails_with_witness(self):
        instance = load_instance(os.path.join(FIXTURES, 'ae_dual_numbers_corrupted.json'))
        results = validate_bialgebroid(instance.bialgebroid)
        by_id = {result.id: result for result in results}
        self.assertEqual(by_id['bialgebroid.counit'].status, FAIL)
        self.assertIsNotNone(by_id['bialgebroid.counit'].witness)
        self.assertEqual(by_id['bialgebroid.source_algebra_map'].status, PASS)


if __name__ == '__main__':
    unittest.main()

#!/usr/bin/env python3
"""
Tests for the suite runner
"""

import os
import sys
import unittest

# Add src directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from instances import load_instance
from reports import FAIL, PASS, SKIPPED
from suites import SUITES, SuiteRunner, collect
from exceptions import PreconditionError

FIXTURES = os.path.join(os.path.dirname(__file__), '..', 'fixtures')

SMALL = {
    'suites': {'max_arity': 1, 'max_degree': 2, 'samples': 4, 'workers': 1},
    'algebra': {'pbw_validation_degree': 2},
}


def runner(name):
    return SuiteRunner(load_instance(os.path.join(FIXTURES, f'{name}.json')), SMALL, seed=7)


class TestSuiteRunner(unittest.TestCase):
    """Test cases for validation and suite dispatch."""

    def test_settings(self):
        r = runner('c2_group_algebra')
        self.assertEqual((r.max_arity, r.max_degree, r.workers, r.pbw_degree), (1, 2, 1, 2))
        self.assertEqual(r.cyclic_degree, 4)
        self.assertEqual(SUITES, ('operad', 'cyclic', 'calculus', 'poisson', 'classical'))

    def test_validate_group_algebra(self):
        report = runner('c2_group_algebra').validate()
        self.assertTrue(report.ok, [c.to_dict() for c in report.checks if c.failed])
        self.assertIn('A', report.metadata['flags'])
        self.assertIn('k', report.metadata['flags'])
        self.assertEqual(report.metadata['seed'], 7)

    def test_validate_includes_antipode(self):
        report = runner('ae_dual_numbers_induced').validate()
        self.assertTrue(report.ok, [c.to_dict() for c in report.checks if c.failed])
        ids = [c.id for c in report.checks]
        self.assertIn('A.antipode.involution', ids)
        self.assertIn('A.antipode.anti_multiplicative', ids)
        self.assertTrue(report.metadata['flags']['A']['is_stable'])

    def test_validate_hopf_algebra_without_ayd_base(self):
        report = runner('sweedler').validate()
        self.assertTrue(report.ok, [c.to_dict() for c in report.checks if c.failed])
        self.assertFalse(report.metadata['flags']['A']['is_ayd'])
        by_id = {c.id: c for c in report.checks}
        self.assertEqual(by_id['A.ayd'].status, SKIPPED)
        self.assertTrue(by_id['A.ayd'].witness)
        self.assertFalse([i for i in by_id if i.startswith('A.antipode')])

    def test_validate_corrupted_fixture(self):
        report = runner('ae_dual_numbers_corrupted').validate()
        self.assertFalse(report.ok)
        failed = [c for c in report.checks if c.status == FAIL]
        self.assertTrue(all(c.witness for c in failed))

    def test_cyclic_suite_reaches_degree_four(self):
        report = runner('c2_group_algebra').run('cyclic')
        self.assertTrue(report.ok, [c.to_dict() for c in report.checks if c.failed])
        self.assertEqual(report.metadata['cyclic_degree'], 4)
        self.assertIn('chain.b_square', [c.id for c in report.checks])

    def test_unknown_suite(self):
        with self.assertRaises(ValueError):
            runner('c2_group_algebra').run('spectral')

    def test_classical_suite_needs_lie_rinehart(self):
        report = runner('c2_group_algebra').run('classical')
        self.assertEqual([c.status for c in report.checks], [SKIPPED])
        self.assertTrue(report.ok)

    def test_classical_suite(self):
        report = runner('abelian_rank2').run('classical')
        self.assertTrue(report.ok, [c.to_dict() for c in report.checks if c.failed])
        ids = [c.id for c in report.checks]
        self.assertEqual(len(ids), len(set(ids)))
        self.assertEqual(report.metadata['suite'], 'classical')

    def test_collect_turns_preconditions_into_skips(self):
        def build():
            raise PreconditionError("no coaction")

        results = collect('cotor.operad', 'cotor operad', build)
        self.assertEqual(len(results), 1)
        self.assertEqual(results[0].status, SKIPPED)
        self.assertEqual(collect('x', 'x', lambda: [])[:], [])
        self.assertNotEqual(PASS, SKIPPED)


if __name__ == '__main__':
    unittest.main()

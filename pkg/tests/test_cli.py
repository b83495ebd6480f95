#!/usr/bin/env python3
"""
Tests for the hopfalgd command-line interface
"""

import io
import json
import os
import shutil
import sys
import tempfile
import unittest
from contextlib import redirect_stdout

import yaml

ROOT = os.path.join(os.path.dirname(__file__), '..')

# Add src and scripts directories to path
sys.path.insert(0, os.path.join(ROOT, 'src'))
sys.path.insert(0, os.path.join(ROOT, 'scripts'))

import hopfalgd
from exceptions import InputError, PreconditionError
from instances import load_instance, load_operand
from linalg import FreeVector

FIXTURES = os.path.join(ROOT, 'fixtures')
OPERANDS = os.path.join(FIXTURES, 'operands')


class TestCommandLine(unittest.TestCase):
    """Test cases for exit codes and written reports."""

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()
        self.output_dir = os.path.join(self.temp_dir, 'reports')
        config = {
            'homology': {'max_degree': 3, 'max_basis_size': 20000},
            'suites': {'max_arity': 1, 'max_degree': 2, 'samples': 4, 'workers': 1},
            'algebra': {'pbw_validation_degree': 2},
            'reports': {'formats': ['json', 'markdown'],
                        'template_dir': os.path.join(ROOT, 'templates')},
            'logging': {'level': 'WARNING', 'file': os.path.join(self.temp_dir, 'logs', 'test.log'),
                        'console_output': False},
        }
        self.config_path = os.path.join(self.temp_dir, 'config.yaml')
        with open(self.config_path, 'w', encoding='utf-8') as f:
            yaml.dump(config, f)

    def tearDown(self):
        shutil.rmtree(self.temp_dir)

    def run_cli(self, *argv):
        with redirect_stdout(io.StringIO()):
            return hopfalgd.main(['--config', self.config_path] + list(argv)
                                 + ['--output-dir', self.output_dir])

    def report(self, stem):
        with open(os.path.join(self.output_dir, f'{stem}.json'), encoding='utf-8') as f:
            return json.load(f)

    def test_validate_passes(self):
        code = self.run_cli('validate', os.path.join(FIXTURES, 'c2_group_algebra.json'))
        self.assertEqual(code, 0)
        report = self.report('c2_group_algebra-validate')
        self.assertTrue(report['ok'])
        self.assertTrue(os.path.exists(os.path.join(self.output_dir, 'c2_group_algebra-validate.md')))

    def test_validate_corrupted_exits_one(self):
        code = self.run_cli('validate', os.path.join(FIXTURES, 'ae_dual_numbers_corrupted.json'))
        self.assertEqual(code, 1)
        report = self.report('ae_dual_numbers_corrupted-validate')
        statuses = {check['id']: check['status'] for check in report['checks']}
        self.assertEqual(statuses['bialgebroid.counit'], 'fail')

    def test_missing_instance_exits_two(self):
        code = self.run_cli('validate', os.path.join(self.temp_dir, 'absent.json'))
        self.assertEqual(code, 2)

    def test_missing_config_exits_two(self):
        with redirect_stdout(io.StringIO()):
            code = hopfalgd.main(['--config', os.path.join(self.temp_dir, 'none.yaml'),
                                  'validate', os.path.join(FIXTURES, 'c2_group_algebra.json')])
        self.assertEqual(code, 2)

    def test_homology_table(self):
        code = self.run_cli('homology', os.path.join(FIXTURES, 'ae_dual_numbers.json'),
                            '--complex', 'chain', '--max-degree', '3')
        self.assertEqual(code, 0)
        table = self.report('ae_dual_numbers-homology')['tables']['homology']
        self.assertEqual(table['dimensions'], [2, 1, 1, 1])

    def test_group_cohomology_with_trivial_coefficients(self):
        code = self.run_cli('homology', os.path.join(FIXTURES, 'c2_group_algebra.json'),
                            '--complex', 'hom', '--coefficient', 'k', '--max-degree', '2')
        self.assertEqual(code, 0)
        table = self.report('c2_group_algebra-homology')['tables']['homology']
        self.assertEqual(table['dimensions'], [1, 0, 0])

    def test_poisson_on_cotor_is_rejected(self):
        code = self.run_cli('homology', os.path.join(FIXTURES, 'ae_dual_numbers.json'),
                            '--complex', 'cotor', '--poisson', 'mu')
        self.assertEqual(code, 2)

    def test_eval_boundary_assertion(self):
        code = self.run_cli('eval', os.path.join(FIXTURES, 'ae_dual_numbers.json'), '--op', 'b',
                            '--operand', os.path.join(OPERANDS, 'x_chain.json'), '--assert-boundary')
        self.assertEqual(code, 0)
        self.assertEqual(self.report('ae_dual_numbers-eval')['tables']['result']['terms'], [])

    def test_eval_wrong_operand_count(self):
        code = self.run_cli('eval', os.path.join(FIXTURES, 'ae_dual_numbers.json'), '--op', 'cap',
                            '--operand', os.path.join(OPERANDS, 'x_chain.json'))
        self.assertEqual(code, 2)

    def test_unknown_suite_is_a_usage_error(self):
        with self.assertRaises(SystemExit):
            with redirect_stdout(io.StringIO()):
                hopfalgd.build_parser().parse_args(['suite', 'x.json', '--suite', 'spectral'])

    def test_classical_suite_skips_on_group_algebra(self):
        code = self.run_cli('suite', os.path.join(FIXTURES, 'c2_group_algebra.json'),
                            '--suite', 'classical')
        self.assertEqual(code, 0)
        report = self.report('c2_group_algebra-suite-classical')
        self.assertEqual(report['totals']['skipped'], 1)


class TestEvaluate(unittest.TestCase):
    """Test cases for the operator evaluator."""

    @classmethod
    def setUpClass(cls):
        cls.instance = load_instance(os.path.join(FIXTURES, 'truncated_polynomial.json'))

    def operand(self, name):
        return load_operand(os.path.join(OPERANDS, f'{name}.json'))

    def test_cap_of_derivation(self):
        kind, degree, value = hopfalgd.evaluate(
            self.instance, 'cap', [self.operand('x_derivation'), self.operand('x_chain')])
        self.assertEqual((kind, degree), ('chain', 0))
        self.assertEqual(value, FreeVector.basis(('x',)))

    def test_shuffle_degrees(self):
        kind, degree, _ = hopfalgd.evaluate(
            self.instance, 'shuffle', [self.operand('x_chain'), self.operand('y_chain')])
        self.assertEqual((kind, degree), ('chain', 2))

    def test_koszul_needs_poisson(self):
        with self.assertRaises(InputError):
            hopfalgd.evaluate(self.instance, 'koszul', [self.operand('x_chain'), self.operand('y_chain')])

    def test_bracket_of_degree_zero(self):
        zero = ('cochain', 0, FreeVector.basis(((), '1')))
        with self.assertRaises(PreconditionError):
            hopfalgd.evaluate(self.instance, 'bracket', [zero, zero])

    def test_mismatched_kinds(self):
        with self.assertRaises(InputError):
            hopfalgd.evaluate(self.instance, 'cup', [self.operand('x_chain'), self.operand('x_derivation')])


if __name__ == '__main__':
    unittest.main()

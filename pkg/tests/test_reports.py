#!/usr/bin/env python3
"""
Tests for check records and report writing
"""

import json
import os
import shutil
import sys
import tempfile
import unittest
from unittest.mock import patch

# Add src directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from exceptions import PreconditionError
from reports import (
    FAIL, PASS, SKIPPED, CheckResult, Report, ReportWriter, classification, first_failure, run_check
)

TEMPLATES = os.path.join(os.path.dirname(__file__), '..', 'templates')


class TestChecks(unittest.TestCase):
    """Test cases for CheckResult and run_check."""

    def test_to_dict_omits_empty_fields(self):
        result = CheckResult('hom.unit_laws', 'μ∘e = id', PASS)
        self.assertEqual(result.to_dict(), {'id': 'hom.unit_laws', 'anchor': 'μ∘e = id', 'status': PASS})
        self.assertTrue(result.passed)
        self.assertFalse(result.failed)

    def test_run_check_outcomes(self):
        self.assertEqual(run_check('a', 'x', lambda: None).status, PASS)
        failed = run_check('b', 'x', lambda: 'witness')
        self.assertEqual(failed.status, FAIL)
        self.assertEqual(failed.witness, 'witness')

    def test_precondition_becomes_skipped(self):
        def body():
            raise PreconditionError("needs a coaction")

        result = run_check('c', 'x', body)
        self.assertEqual(result.status, SKIPPED)
        self.assertIn('needs a coaction', result.detail)
        self.assertIsNone(result.witness)

    def test_other_errors_propagate(self):
        def body():
            raise ValueError("bug")

        with self.assertRaises(ValueError):
            run_check('d', 'x', body)

    def test_classification_keeps_witness(self):
        result = classification(run_check('A.ayd', 'x', lambda: "('1', 'x')"), 'is_ayd')
        self.assertEqual(result.status, SKIPPED)
        self.assertEqual(result.witness, "('1', 'x')")
        self.assertEqual(result.detail, 'is_ayd is false')
        passed = run_check('A.ayd', 'x', lambda: None)
        self.assertIs(classification(passed, 'is_ayd'), passed)

    def test_first_failure(self):
        self.assertIsNone(first_failure([1, 2, 3], lambda n: n > 0))
        self.assertEqual(first_failure([1, -2, -3], lambda n: n > 0), '-2')
        self.assertEqual(first_failure([4, 5], lambda n: n < 5, lambda n: f"n={n}"), 'n=5')


class TestReport(unittest.TestCase):
    """Test cases for Report aggregation."""

    def setUp(self):
        self.report = Report('validate', 'toy')
        self.report.extend([
            CheckResult('z.last', 'a', PASS),
            CheckResult('a.first', 'a', SKIPPED, detail='precondition: none'),
        ])

    def test_totals_and_ok(self):
        self.assertEqual(self.report.totals(), {PASS: 1, FAIL: 0, SKIPPED: 1})
        self.assertTrue(self.report.ok)
        self.report.add(CheckResult('m.middle', 'a', FAIL, witness='w'))
        self.assertFalse(self.report.ok)

    def test_sorted_checks(self):
        ids = [check['id'] for check in self.report.to_dict()['checks']]
        self.assertEqual(ids, ['a.first', 'z.last'])


class TestReportWriter(unittest.TestCase):
    """Test cases for JSON and markdown emission."""

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()
        self.report = Report('homology', 'toy', [CheckResult('homology.chain', 'd∘d = 0', PASS)],
                             tables={'homology': {'complex': 'C(toy)', 'dimensions': [2, 1],
                                                  'chain_dimensions': [2, 2]}},
                             metadata={'seed': 0})

    def tearDown(self):
        shutil.rmtree(self.temp_dir)

    def writer(self, **overrides):
        config = {'output_dir': self.temp_dir, 'template_dir': TEMPLATES}
        config.update(overrides)
        return ReportWriter({'reports': config})

    def test_writes_both_formats(self):
        written = self.writer().write(self.report, 'toy-homology')
        self.assertEqual(len(written), 2)
        with open(os.path.join(self.temp_dir, 'toy-homology.json'), encoding='utf-8') as f:
            data = json.load(f)
        self.assertTrue(data['ok'])
        self.assertEqual(data['tables']['homology']['dimensions'], [2, 1])
        with open(os.path.join(self.temp_dir, 'toy-homology.md'), encoding='utf-8') as f:
            markdown = f.read()
        self.assertIn('# homology', markdown)
        self.assertIn('homology.chain', markdown)

    def test_json_only(self):
        written = self.writer(formats=['json']).write(self.report, 'only')
        self.assertEqual(written, [os.path.join(self.temp_dir, 'only.json')])

    def test_plain_renderer_without_templates(self):
        with patch('reports.JINJA2_AVAILABLE', False):
            writer = self.writer()
        self.assertIsNone(writer.jinja_env)
        markdown = writer.render_markdown(self.report)
        self.assertIn('**1 passed, 0 failed, 0 skipped**', markdown)
        self.assertIn('| homology.chain | pass |', markdown)


if __name__ == '__main__':
    unittest.main()

#!/usr/bin/env python3
"""
Tests for utility functions
"""

import os
import sys
import unittest
import tempfile
import yaml
from unittest.mock import patch

# Add src directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from utils import (
    REQUIRED_SECTIONS, default_config, format_duration, from_json_label, load_config,
    load_json, max_basis_size, parse_size, progress, save_json, to_json_label,
    validate_dependencies
)


class TestUtils(unittest.TestCase):
    """Test cases for utility functions."""

    def test_load_config_valid(self):
        """Test loading valid configuration file."""
        config_data = {
            'homology': {'max_degree': 3},
            'suites': {'max_arity': 2},
            'logging': {'level': 'INFO'}
        }

        with tempfile.NamedTemporaryFile(mode='w', suffix='.yaml', delete=False) as f:
            yaml.dump(config_data, f)
            config_path = f.name

        try:
            config = load_config(config_path)
            self.assertEqual(config['homology']['max_degree'], 3)
            self.assertEqual(config['suites']['max_arity'], 2)
            self.assertEqual(config['logging']['level'], 'INFO')
            for section in REQUIRED_SECTIONS:
                self.assertIn(section, config)
        finally:
            os.unlink(config_path)

    def test_load_config_nonexistent(self):
        """Test loading non-existent configuration file."""
        with self.assertRaises(FileNotFoundError):
            load_config('/nonexistent/config.yaml')

    def test_load_config_invalid_yaml(self):
        """Test loading invalid YAML file."""
        with tempfile.NamedTemporaryFile(mode='w', suffix='.yaml', delete=False) as f:
            f.write("invalid: yaml: content: [")
            config_path = f.name

        try:
            with self.assertRaises(yaml.YAMLError):
                load_config(config_path)
        finally:
            os.unlink(config_path)

    def test_bundled_config_loads(self):
        path = os.path.join(os.path.dirname(__file__), '..', 'config', 'default.yaml')
        config = load_config(path)
        self.assertEqual(config['algebra']['max_validation_dim'], 32)
        self.assertEqual(config['homology']['max_basis_size'], 20000)
        self.assertEqual(config['cli']['seed'], 0)

    def test_default_config_has_every_section(self):
        self.assertEqual(sorted(default_config()), sorted(REQUIRED_SECTIONS))

    def test_parse_size(self):
        self.assertEqual(parse_size('10MB'), 10 * 1024 * 1024)
        self.assertEqual(parse_size('1kb'), 1024)
        self.assertEqual(parse_size('512B'), 512)
        self.assertEqual(parse_size('2048'), 2048)
        self.assertEqual(parse_size('lots'), 10 * 1024 * 1024)

    @patch.dict(os.environ, {'HOPFALGD_MAX_DIM': '123'})
    def test_max_basis_size_environment_wins(self):
        self.assertEqual(max_basis_size({'homology': {'max_basis_size': 5}}), 123)

    @patch.dict(os.environ, {}, clear=True)
    def test_max_basis_size_from_config(self):
        self.assertEqual(max_basis_size({'homology': {'max_basis_size': 5}}), 5)
        self.assertEqual(max_basis_size(), 20000)

    @patch.dict(os.environ, {'HOPFALGD_MAX_DIM': 'many'})
    def test_max_basis_size_ignores_garbage(self):
        self.assertEqual(max_basis_size({'homology': {'max_basis_size': 7}}), 7)

    def test_json_labels(self):
        label = ('1', ('x', '1'), (('y', '1'),))
        self.assertEqual(to_json_label(label), ['1', ['x', '1'], [['y', '1']]])
        self.assertEqual(from_json_label(to_json_label(label)), label)

    def test_save_json_sorts_keys(self):
        with tempfile.TemporaryDirectory() as temp_dir:
            path = os.path.join(temp_dir, 'nested', 'report.json')
            self.assertTrue(save_json({'b': 1, 'a': 2}, path))
            with open(path, encoding='utf-8') as f:
                text = f.read()
            self.assertLess(text.index('"a"'), text.index('"b"'))
            self.assertEqual(load_json(path), {'a': 2, 'b': 1})

    def test_load_json_missing(self):
        self.assertIsNone(load_json('/nonexistent/file.json'))

    def test_format_duration(self):
        self.assertEqual(format_duration(5), "5.0 seconds")
        self.assertEqual(format_duration(90), "1.5 minutes")
        self.assertEqual(format_duration(7200), "2.0 hours")

    def test_validate_dependencies(self):
        deps = validate_dependencies()
        self.assertIn('sympy', deps)
        self.assertIn('yaml', deps)
        self.assertTrue(deps['yaml'])

    def test_progress_disabled_is_passthrough(self):
        self.assertEqual(list(progress([1, 2, 3], 'sweep')), [1, 2, 3])
        self.assertEqual(list(progress(range(3), 'sweep', enabled=True)), [0, 1, 2])


if __name__ == '__main__':
    unittest.main()

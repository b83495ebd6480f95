#!/usr/bin/env python3
"""
Tests for exact linear algebra
"""

import os
import sys
import unittest
from fractions import Fraction

# Add src directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from exceptions import InputError
from linalg import (
    Accumulator, FreeVector, Matrix, SubspaceSolver, format_scalar, kernel_basis,
    quotient_reduce, rank, rref, tensor, to_scalar
)


class TestScalars(unittest.TestCase):

    def test_to_scalar(self):
        self.assertEqual(to_scalar(3), Fraction(3))
        self.assertEqual(to_scalar("2/4"), Fraction(1, 2))
        self.assertEqual(to_scalar(" -3/6 "), Fraction(-1, 2))

    def test_to_scalar_rejects_inexact(self):
        for bad in (0.5, True, "abc", "1/0", None):
            with self.assertRaises(InputError):
                to_scalar(bad)

    def test_format_scalar(self):
        self.assertEqual(format_scalar(Fraction(3, 6)), "1/2")
        self.assertEqual(format_scalar(Fraction(4)), "4")


class TestFreeVector(unittest.TestCase):
    """Test cases for sparse vectors over hashable labels."""

    def test_zero_coefficients_are_dropped(self):
        v = FreeVector({'a': 1, 'b': 0})
        self.assertEqual(v.support(), ['a'])
        self.assertTrue((v - v).is_zero())

    def test_arithmetic(self):
        v = FreeVector.from_pairs([('a', 1), ('b', 2), ('a', 1)])
        w = FreeVector.basis('b', -2)
        self.assertEqual(v + w, FreeVector.basis('a', 2))
        self.assertEqual(v.scale(Fraction(1, 2)).coeff('b'), 1)
        self.assertEqual(-v, v.scale(-1))

    def test_equality_and_hash(self):
        v = FreeVector({('x', '1'): 1})
        w = FreeVector.basis(('x', '1'))
        self.assertEqual(v, w)
        self.assertEqual(hash(v), hash(w))

    def test_items_are_ordered(self):
        v = FreeVector({'b': 1, 'a': 2, 1: 3})
        self.assertEqual([label for label, _ in v.items()], [1, 'a', 'b'])

    def test_map_and_filter(self):
        v = FreeVector({'a': 1, 'b': 2})
        self.assertEqual(v.map_labels(lambda _: 'c'), FreeVector.basis('c', 3))
        self.assertEqual(v.filter(lambda label: label == 'b'), FreeVector.basis('b', 2))

    def test_accumulator(self):
        acc = Accumulator()
        acc.add('a', Fraction(1))
        acc.add_vector(FreeVector({'a': 1, 'b': 1}), -1)
        self.assertEqual(acc.result(), FreeVector.basis('b', -1))

    def test_tensor(self):
        v = FreeVector({'x': 1, 'y': 2})
        w = FreeVector.basis('z', 3)
        self.assertEqual(tensor(v, w), FreeVector({('x', 'z'): 3, ('y', 'z'): 6}))


class TestMatrices(unittest.TestCase):
    """Test cases for rref, rank and kernels."""

    def test_rref_example(self):
        reduced, pivots = rref(Matrix.from_rows([[2, 4], [1, 2]]))
        self.assertEqual(reduced.to_lists(), [[1, 2], [0, 0]])
        self.assertEqual(pivots, [0])

    def test_rref_of_zero_matrix(self):
        reduced, pivots = rref(Matrix(2, 3))
        self.assertTrue(reduced.is_zero())
        self.assertEqual(pivots, [])

    def test_rank_and_kernel(self):
        m = Matrix.from_rows([[1, 1, 0], [0, 1, 1]])
        self.assertEqual(rank(m), 2)
        kernel = kernel_basis(m)
        self.assertEqual(len(kernel), 1)
        self.assertEqual(m.apply(dict(kernel[0].terms())), {})

    def test_product(self):
        a = Matrix.from_rows([[1, 2], [3, 4]])
        b = Matrix.from_rows([[0, 1], [1, 0]])
        self.assertEqual((a @ b).to_lists(), [[2, 1], [4, 3]])

    def test_out_of_range(self):
        with self.assertRaises(ValueError):
            Matrix(1, 1, {2: {0: 1}})


class TestSubspaceSolver(unittest.TestCase):
    """Test cases for incremental reduction and membership."""

    def test_reduce_is_order_independent(self):
        relations = [FreeVector({'a': 1, 'b': -1}), FreeVector({'b': 1, 'c': -1})]
        v = FreeVector.basis('c')
        self.assertEqual(quotient_reduce(relations, v), quotient_reduce(relations[::-1], v))
        self.assertEqual(quotient_reduce(relations, FreeVector.basis('a')),
                         quotient_reduce(relations, FreeVector.basis('c')))

    def test_add_reports_growth(self):
        solver = SubspaceSolver()
        self.assertTrue(solver.add(FreeVector({'a': 1, 'b': 1})))
        self.assertFalse(solver.add(FreeVector({'a': 2, 'b': 2})))
        self.assertEqual(solver.rank, 1)

    def test_solve_returns_combination(self):
        solver = SubspaceSolver()
        first = FreeVector({'a': 1, 'b': 1})
        second = FreeVector({'b': 1, 'c': 1})
        solver.add(first, tag=0)
        solver.add(second, tag=1)
        target = first.scale(2) - second
        combination = solver.solve(target)
        self.assertEqual(combination, FreeVector({0: 2, 1: -1}))
        self.assertIsNone(solver.solve(FreeVector.basis('a')))


if __name__ == '__main__':
    unittest.main()

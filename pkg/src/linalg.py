#!/usr/bin/env python3
"""
Exact Linear Algebra

Rational scalars, finite-support vectors over hashable basis labels, sparse matrices
and the kernel, image and quotient machinery every other module builds on.
"""

import logging
import threading
from fractions import Fraction
from functools import lru_cache
from itertools import product as cartesian
from typing import (
    Any, Callable, Dict, Hashable, Iterable, Iterator, List, Mapping,
    Optional, Sequence, Tuple
)

from sympy.polys.domains import QQ
from sympy.polys.matrices.sdm import SDM

from exceptions import InputError

logger = logging.getLogger(__name__)

Scalar = Fraction
Label = Hashable


def to_scalar(value: Any) -> Fraction:
    """
    Convert ints, Fractions and "p/q" strings to an exact rational.

    Args:
        value: Value to convert

    Returns:
        Fraction: Canonical rational (reduced, positive denominator)

    Raises:
        InputError: For floats, booleans or unparsable strings
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise InputError(f"Scalars must be exact rationals, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise InputError(f"Not a rational number: {value!r}")
    raise InputError(f"Unsupported scalar type {type(value).__name__}")


def format_scalar(value: Fraction) -> str:
    """Serialize a rational as "p/q" (or "p" for integers)."""
    return str(value)


@lru_cache(maxsize=None)
def label_key(label: Label) -> Tuple:
    """
    Total order on basis labels: integers, then strings, then tuples
    compared entry by entry.
    """
    if isinstance(label, tuple):
        return (2, tuple(label_key(part) for part in label))
    if isinstance(label, int) and not isinstance(label, bool):
        return (0, label, '')
    return (1, 0, str(label))


class FreeVector:
    """
    Finite formal linear combination of basis labels with rational coefficients.

    Zero coefficients are never stored, so two vectors are equal exactly when
    their term dictionaries are equal.
    """

    __slots__ = ('_terms', '_hash')

    def __init__(self, terms: Optional[Mapping[Label, Any]] = None):
        clean: Dict[Label, Fraction] = {}
        if terms:
            for label, coeff in terms.items():
                coeff = to_scalar(coeff)
                if coeff:
                    clean[label] = coeff
        self._terms = clean
        self._hash: Optional[int] = None

    @classmethod
    def _wrap(cls, terms: Dict[Label, Fraction]) -> 'FreeVector':
        vector = cls.__new__(cls)
        vector._terms = terms
        vector._hash = None
        return vector

    @classmethod
    def basis(cls, label: Label, coeff: Any = 1) -> 'FreeVector':
        coeff = to_scalar(coeff)
        return cls._wrap({label: coeff} if coeff else {})

    @classmethod
    def zero(cls) -> 'FreeVector':
        return cls._wrap({})

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[Label, Any]]) -> 'FreeVector':
        acc = Accumulator()
        for label, coeff in pairs:
            acc.add(label, to_scalar(coeff))
        return acc.result()

    @classmethod
    def sum(cls, vectors: Iterable['FreeVector']) -> 'FreeVector':
        acc = Accumulator()
        for vector in vectors:
            acc.add_vector(vector)
        return acc.result()

    def terms(self) -> Iterator[Tuple[Label, Fraction]]:
        """Unordered iteration over (label, coefficient)."""
        return iter(self._terms.items())

    def items(self) -> List[Tuple[Label, Fraction]]:
        """Terms sorted by basis-label order."""
        return sorted(self._terms.items(), key=lambda item: label_key(item[0]))

    def support(self) -> List[Label]:
        return sorted(self._terms, key=label_key)

    def coeff(self, label: Label) -> Fraction:
        return self._terms.get(label, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __contains__(self, label: Label) -> bool:
        return label in self._terms

    def __add__(self, other: 'FreeVector') -> 'FreeVector':
        if not other._terms:
            return self
        if not self._terms:
            return other
        terms = dict(self._terms)
        for label, coeff in other._terms.items():
            total = terms.get(label, 0) + coeff
            if total:
                terms[label] = total
            else:
                terms.pop(label, None)
        return FreeVector._wrap(terms)

    def __sub__(self, other: 'FreeVector') -> 'FreeVector':
        return self + other.scale(-1)

    def __neg__(self) -> 'FreeVector':
        return self.scale(-1)

    def scale(self, coeff: Any) -> 'FreeVector':
        coeff = to_scalar(coeff)
        if not coeff:
            return FreeVector.zero()
        if coeff == 1:
            return self
        return FreeVector._wrap({label: c * coeff for label, c in self._terms.items()})

    def __mul__(self, coeff: Any) -> 'FreeVector':
        return self.scale(coeff)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FreeVector):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def apply(self, fn: Callable[[Label], 'FreeVector']) -> 'FreeVector':
        """Extend a map defined on basis labels linearly."""
        acc = Accumulator()
        for label, coeff in self._terms.items():
            acc.add_vector(fn(label), coeff)
        return acc.result()

    def map_labels(self, fn: Callable[[Label], Label]) -> 'FreeVector':
        acc = Accumulator()
        for label, coeff in self._terms.items():
            acc.add(fn(label), coeff)
        return acc.result()

    def filter(self, keep: Callable[[Label], bool]) -> 'FreeVector':
        return FreeVector._wrap({l: c for l, c in self._terms.items() if keep(l)})

    def __repr__(self) -> str:
        inner = ', '.join(f"{label!r}: {format_scalar(c)}" for label, c in self.items())
        return f"FreeVector({{{inner}}})"


class Accumulator:
    """Mutable sum used while building a FreeVector term by term."""

    __slots__ = ('_terms',)

    def __init__(self):
        self._terms: Dict[Label, Fraction] = {}

    def add(self, label: Label, coeff: Fraction) -> None:
        if not coeff:
            return
        total = self._terms.get(label, 0) + coeff
        if total:
            self._terms[label] = total
        else:
            self._terms.pop(label, None)

    def add_vector(self, vector: FreeVector, coeff: Any = 1) -> None:
        if coeff == 1:
            for label, c in vector.terms():
                self.add(label, c)
        elif coeff:
            for label, c in vector.terms():
                self.add(label, c * coeff)

    def result(self) -> FreeVector:
        return FreeVector._wrap(dict(self._terms))


def tensor(*vectors: FreeVector) -> FreeVector:
    """Tensor product of vectors; labels of the result are tuples of labels."""
    acc = Accumulator()
    for combo in cartesian(*[list(v.terms()) for v in vectors]):
        coeff = Fraction(1)
        for _, c in combo:
            coeff *= c
        acc.add(tuple(label for label, _ in combo), coeff)
    return acc.result()


def _to_domain(value: Fraction):
    return QQ(value.numerator, value.denominator)


def _from_domain(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


class Matrix:
    """Sparse matrix of rationals stored as a dict of non-zero rows."""

    def __init__(self, nrows: int, ncols: int,
                 rows: Optional[Mapping[int, Mapping[int, Any]]] = None):
        if nrows < 0 or ncols < 0:
            raise ValueError("Matrix dimensions must be non-negative")
        self.nrows = nrows
        self.ncols = ncols
        self._rows: Dict[int, Dict[int, Fraction]] = {}
        for i, row in (rows or {}).items():
            if not 0 <= i < nrows:
                raise ValueError(f"Row index {i} out of range for {nrows} rows")
            clean = {}
            for j, value in row.items():
                if not 0 <= j < ncols:
                    raise ValueError(f"Column index {j} out of range for {ncols} columns")
                value = to_scalar(value)
                if value:
                    clean[j] = value
            if clean:
                self._rows[i] = clean

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]]) -> 'Matrix':
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        if any(len(row) != ncols for row in rows):
            raise ValueError("Ragged rows")
        return cls(nrows, ncols, {i: dict(enumerate(row)) for i, row in enumerate(rows)})

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self.ncols)

    def entry(self, i: int, j: int) -> Fraction:
        return self._rows.get(i, {}).get(j, Fraction(0))

    def row(self, i: int) -> Dict[int, Fraction]:
        return dict(self._rows.get(i, {}))

    def to_lists(self) -> List[List[Fraction]]:
        return [[self.entry(i, j) for j in range(self.ncols)] for i in range(self.nrows)]

    def is_zero(self) -> bool:
        return not self._rows

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __matmul__(self, other: 'Matrix') -> 'Matrix':
        if self.ncols != other.nrows:
            raise ValueError(f"Shape mismatch {self.shape} @ {other.shape}")
        rows: Dict[int, Dict[int, Fraction]] = {}
        for i, row in self._rows.items():
            acc: Dict[int, Fraction] = {}
            for k, a in row.items():
                for j, b in other._rows.get(k, {}).items():
                    acc[j] = acc.get(j, 0) + a * b
            rows[i] = acc
        return Matrix(self.nrows, other.ncols, rows)

    def apply(self, vector: Mapping[int, Any]) -> Dict[int, Fraction]:
        """Multiply by a sparse column vector given as {column: value}."""
        result: Dict[int, Fraction] = {}
        for i, row in self._rows.items():
            total = sum((row[j] * to_scalar(v) for j, v in vector.items() if j in row),
                        Fraction(0))
            if total:
                result[i] = total
        return result

    def to_sdm(self) -> SDM:
        dod = {i: {j: _to_domain(v) for j, v in row.items()} for i, row in self._rows.items()}
        return SDM(dod, self.shape, QQ)

    @classmethod
    def from_sdm(cls, sdm: SDM, shape: Tuple[int, int]) -> 'Matrix':
        rows = {i: {j: _from_domain(v) for j, v in row.items()} for i, row in sdm.items()}
        return cls(shape[0], shape[1], rows)

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols}, {len(self._rows)} non-zero rows)"


def rref(matrix: Matrix) -> Tuple[Matrix, List[int]]:
    """
    Reduced row echelon form over the rationals.

    Args:
        matrix: Input matrix

    Returns:
        tuple: (reduced matrix, strictly increasing pivot columns)
    """
    if matrix.nrows == 0 or matrix.ncols == 0 or matrix.is_zero():
        return Matrix(matrix.nrows, matrix.ncols), []
    reduced, pivots = matrix.to_sdm().rref()
    return Matrix.from_sdm(reduced, matrix.shape), list(pivots)


def rank(matrix: Matrix) -> int:
    return len(rref(matrix)[1])


def kernel_basis(matrix: Matrix) -> List[FreeVector]:
    """
    Basis of the right kernel, as vectors over column indices.

    Returns:
        list: cols − rank independent vectors spanning ker(matrix)
    """
    reduced, pivots = rref(matrix)
    pivot_set = set(pivots)
    basis = []
    for free in range(matrix.ncols):
        if free in pivot_set:
            continue
        terms = {free: Fraction(1)}
        for r, pivot_col in enumerate(pivots):
            value = reduced.entry(r, free)
            if value:
                terms[pivot_col] = -value
        basis.append(FreeVector(terms))
    return basis


class SubspaceSolver:
    """
    Incrementally maintained reduced echelon basis of a subspace of a free
    vector space.

    The pivot of every row is the smallest label of its support and every row
    vanishes at the other pivots, so the basis is the unique reduced echelon
    form for the label order. ``reduce`` therefore returns the unique normal
    form of a vector modulo the subspace. When vectors are added with a tag,
    ``solve`` expresses members of the subspace in terms of the tagged vectors.
    """

    def __init__(self, vectors: Optional[Iterable[FreeVector]] = None):
        self._rows: Dict[Label, FreeVector] = {}
        self._combos: Dict[Label, FreeVector] = {}
        self._lock = threading.RLock()
        for vector in vectors or []:
            self.add(vector)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def pivots(self) -> List[Label]:
        return sorted(self._rows, key=label_key)

    def rows(self) -> List[FreeVector]:
        return [self._rows[p] for p in self.pivots()]

    def _reduce(self, vector: FreeVector, combo: Optional[FreeVector] = None
                ) -> Tuple[FreeVector, FreeVector]:
        residual = Accumulator()
        residual.add_vector(vector)
        combination = Accumulator()
        if combo is not None:
            combination.add_vector(combo)
        for label, coeff in vector.terms():
            row = self._rows.get(label)
            if row is None:
                continue
            residual.add_vector(row, -coeff)
            combination.add_vector(self._combos[label], -coeff)
        return residual.result(), combination.result()

    def reduce(self, vector: FreeVector) -> FreeVector:
        """Normal form of ``vector`` modulo the subspace."""
        with self._lock:
            return self._reduce(vector)[0]

    def contains(self, vector: FreeVector) -> bool:
        return self.reduce(vector).is_zero()

    def add(self, vector: FreeVector, tag: Optional[Label] = None) -> bool:
        """
        Insert a vector.

        Returns:
            bool: True if it enlarged the subspace
        """
        with self._lock:
            start = FreeVector.basis(tag) if tag is not None else FreeVector.zero()
            residual, combo = self._reduce(vector, start)
            if residual.is_zero():
                return False
            pivot = min(residual.support(), key=label_key)
            inverse = 1 / residual.coeff(pivot)
            residual = residual.scale(inverse)
            combo = combo.scale(inverse)
            for other, row in list(self._rows.items()):
                c = row.coeff(pivot)
                if c:
                    self._rows[other] = row - residual.scale(c)
                    self._combos[other] = self._combos[other] - combo.scale(c)
            self._rows[pivot] = residual
            self._combos[pivot] = combo
            return True

    def solve(self, vector: FreeVector) -> Optional[FreeVector]:
        """
        Express ``vector`` through the tagged generators.

        Returns:
            FreeVector over tags, or None when the vector is not in the subspace
        """
        with self._lock:
            acc = Accumulator()
            residual = Accumulator()
            residual.add_vector(vector)
            for label, coeff in vector.terms():
                row = self._rows.get(label)
                if row is None:
                    continue
                residual.add_vector(row, -coeff)
                acc.add_vector(self._combos[label], coeff)
            if not residual.result().is_zero():
                return None
            return acc.result()

    def copy(self) -> 'SubspaceSolver':
        with self._lock:
            clone = SubspaceSolver()
            clone._rows = dict(self._rows)
            clone._combos = dict(self._combos)
            return clone


def quotient_reduce(relations: Sequence[FreeVector], vector: FreeVector) -> FreeVector:
    """
    Unique normal form of ``vector`` modulo the span of ``relations``.

    Pivots follow the label order, so the result does not depend on the
    order in which relations are listed.
    """
    return SubspaceSolver(relations).reduce(vector)

#!/usr/bin/env python3
"""
Algebra Core

Finite-dimensional algebras by structure constants, Lie-Rinehart algebras and the lazy
PBW carrier of their enveloping algebras.
"""

import logging
import threading
from itertools import combinations_with_replacement, product as cartesian
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from exceptions import PreconditionError, StructureError
from linalg import Accumulator, FreeVector, Label

logger = logging.getLogger(__name__)

DEFAULT_MAX_DIM = 32


class Carrier:
    """
    Common interface of everything that can serve as the algebra U or the base A.

    Elements are FreeVectors over the carrier's basis labels.
    """

    name: str = 'carrier'
    commutative: bool = False
    is_finite: bool = True

    def __init__(self):
        self._products: Dict[Tuple[Label, Label], FreeVector] = {}
        self._lock = threading.RLock()

    def basis(self) -> List[Label]:
        raise NotImplementedError

    @property
    def dimension(self) -> int:
        return len(self.basis())

    def unit(self) -> FreeVector:
        raise NotImplementedError

    def unit_label(self) -> Optional[Label]:
        """The unit's label when the unit is itself a basis element."""
        unit = self.unit()
        if len(unit) == 1:
            label, coeff = next(unit.terms())
            if coeff == 1:
                return label
        return None

    def has_label(self, label: Label) -> bool:
        raise NotImplementedError

    def element(self, label: Label, coeff: Any = 1) -> FreeVector:
        if not self.has_label(label):
            raise KeyError(f"{label!r} is not a basis label of {self.name}")
        return FreeVector.basis(label, coeff)

    def _compute_product(self, x: Label, y: Label) -> FreeVector:
        raise NotImplementedError

    def multiply_basis(self, x: Label, y: Label) -> FreeVector:
        key = (x, y)
        cached = self._products.get(key)
        if cached is not None:
            return cached
        with self._lock:
            cached = self._products.get(key)
            if cached is None:
                cached = self._compute_product(x, y)
                self._products[key] = cached
            return cached

    def multiply(self, x: FreeVector, y: FreeVector) -> FreeVector:
        """Bilinear product of two elements."""
        acc = Accumulator()
        for lx, cx in x.terms():
            for ly, cy in y.terms():
                acc.add_vector(self.multiply_basis(lx, ly), cx * cy)
        return acc.result()

    def product(self, *factors: FreeVector) -> FreeVector:
        """Left-to-right product; the empty product is the unit."""
        result = self.unit()
        for factor in factors:
            result = self.multiply(result, factor)
        return result

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r})"


class StructureConstantAlgebra(Carrier):
    """
    Finite-dimensional associative unital algebra given by its multiplication table.

    Associativity, unitality and the commutative flag are checked exhaustively at
    construction unless ``validate`` is False.
    """

    def __init__(self, name: str, labels: Sequence[Label],
                 table: Mapping[Tuple[Label, Label], FreeVector], unit: FreeVector,
                 commutative: Optional[bool] = None, validate: bool = True,
                 max_dim: int = DEFAULT_MAX_DIM):
        super().__init__()
        self.name = name
        self.labels = list(labels)
        self._label_set = set(self.labels)
        if len(self._label_set) != len(self.labels):
            raise StructureError(f"Duplicate basis labels in algebra {name}")
        self._unit = unit
        self._table = dict(table)

        for label in unit.support():
            if label not in self._label_set:
                raise StructureError(f"Unit of {name} uses undeclared label {label!r}")
        for (x, y), value in self._table.items():
            if x not in self._label_set or y not in self._label_set:
                raise StructureError(f"Product ({x!r}, {y!r}) of {name} uses undeclared labels")
            for label in value.support():
                if label not in self._label_set:
                    raise StructureError(
                        f"Product ({x!r}, {y!r}) of {name} has undeclared label {label!r}")

        if validate:
            if len(self.labels) > max_dim:
                raise PreconditionError(
                    f"Algebra {name} has dimension {len(self.labels)} > {max_dim}; "
                    f"raise algebra.max_validation_dim to validate it")
            self._validate()

        is_commutative = all(self.multiply_basis(x, y) == self.multiply_basis(y, x)
                             for x in self.labels for y in self.labels)
        if commutative and not is_commutative:
            raise StructureError(f"Algebra {name} is declared commutative but is not")
        self.commutative = is_commutative

    def basis(self) -> List[Label]:
        return list(self.labels)

    def unit(self) -> FreeVector:
        return self._unit

    def has_label(self, label: Label) -> bool:
        return label in self._label_set

    def _compute_product(self, x: Label, y: Label) -> FreeVector:
        return self._table.get((x, y), FreeVector.zero())

    def _validate(self) -> None:
        logger.debug(f"Validating structure constants of {self.name} ({len(self.labels)} dim)")
        for x in self.labels:
            ex = FreeVector.basis(x)
            if self.multiply(self._unit, ex) != ex or self.multiply(ex, self._unit) != ex:
                raise StructureError(f"Unit law fails in {self.name}", witness=repr(x))
        for x, y, z in cartesian(self.labels, repeat=3):
            left = self.multiply(self.multiply_basis(x, y), FreeVector.basis(z))
            right = self.multiply(FreeVector.basis(x), self.multiply_basis(y, z))
            if left != right:
                raise StructureError(f"Associativity fails in {self.name}",
                                     witness=repr((x, y, z)))


def scalar_algebra() -> StructureConstantAlgebra:
    """The ground field ℚ as a one-dimensional algebra with basis label '1'."""
    one = FreeVector.basis('1')
    return StructureConstantAlgebra('Q', ['1'], {('1', '1'): one}, one, validate=False)


def monomial_name(variables: Sequence[str], exponents: Sequence[int]) -> str:
    parts = []
    for var, exp in zip(variables, exponents):
        if exp == 1:
            parts.append(var)
        elif exp > 1:
            parts.append(f"{var}^{exp}")
    return ''.join(parts) or '1'


def truncated_polynomial_algebra(variables: Sequence[str], nilpotency: int = 2,
                                 name: Optional[str] = None) -> StructureConstantAlgebra:
    """
    ℚ[x₁,…,x_k]/(x₁ⁿ,…,x_kⁿ) with monomial labels such as '1', 'x', 'xy'.

    Args:
        variables: Variable names
        nilpotency: Exponent at which each variable vanishes
        name: Algebra name

    Returns:
        StructureConstantAlgebra: The truncated polynomial algebra
    """
    if nilpotency < 1:
        raise StructureError("Nilpotency order must be positive")
    exponents = list(cartesian(range(nilpotency), repeat=len(variables)))
    exponents.sort(key=lambda e: (sum(e), tuple(-v for v in e)))
    names = {e: monomial_name(variables, e) for e in exponents}
    table = {}
    for e, f in cartesian(exponents, repeat=2):
        total = tuple(a + b for a, b in zip(e, f))
        if all(v < nilpotency for v in total):
            table[(names[e], names[f])] = FreeVector.basis(names[total])
    unit = FreeVector.basis(names[tuple(0 for _ in variables)])
    default_name = 'Q[' + ','.join(variables) + ']/(' + ','.join(
        f"{v}^{nilpotency}" for v in variables) + ')'
    return StructureConstantAlgebra(name or default_name, [names[e] for e in exponents],
                                    table, unit, commutative=True)


def group_algebra(elements: Sequence[str], multiplication: Mapping[Tuple[str, str], str],
                  identity: str, name: str = 'Q[G]') -> StructureConstantAlgebra:
    """Group algebra from a Cayley table; group axioms follow from the algebra checks."""
    table = {(g, h): FreeVector.basis(multiplication[(g, h)])
             for g in elements for h in elements}
    algebra = StructureConstantAlgebra(name, elements, table, FreeVector.basis(identity))
    for g in elements:
        if not any(multiplication[(g, h)] == identity for h in elements):
            raise StructureError(f"{g!r} has no inverse in {name}")
    return algebra


def cyclic_group_algebra(order: int) -> StructureConstantAlgebra:
    if order < 1:
        raise StructureError("Group order must be positive")
    names = ['e'] + ['g' if k == 1 else f"g^{k}" for k in range(1, order)]
    table = {(names[i], names[j]): names[(i + j) % order]
             for i in range(order) for j in range(order)}
    return group_algebra(names, table, 'e', name=f"Q[C{order}]")


def opposite_algebra(algebra: StructureConstantAlgebra) -> StructureConstantAlgebra:
    table = {(x, y): algebra.multiply_basis(y, x)
             for x in algebra.labels for y in algebra.labels}
    return StructureConstantAlgebra(f"{algebra.name}^op", algebra.labels, table,
                                    algebra.unit(), validate=False)


def tensor_algebra(left: StructureConstantAlgebra, right: StructureConstantAlgebra,
                   name: Optional[str] = None, validate: bool = False
                   ) -> StructureConstantAlgebra:
    """Factorwise product on pairs (x, y)."""
    labels = [(x, y) for x in left.labels for y in right.labels]
    table = {}
    for (x, y), (z, w) in cartesian(labels, repeat=2):
        first = left.multiply_basis(x, z)
        second = right.multiply_basis(y, w)
        acc = Accumulator()
        for a, ca in first.terms():
            for b, cb in second.terms():
                acc.add((a, b), ca * cb)
        table[((x, y), (z, w))] = acc.result()
    unit = Accumulator()
    for a, ca in left.unit().terms():
        for b, cb in right.unit().terms():
            unit.add((a, b), ca * cb)
    return StructureConstantAlgebra(name or f"{left.name}⊗{right.name}", labels, table,
                                    unit.result(), validate=validate)


def enveloping_algebra(algebra: StructureConstantAlgebra) -> StructureConstantAlgebra:
    """Aᵉ = A ⊗ Aᵒᵖ, so that (a⊗b)(c⊗d) = ac ⊗ db."""
    return tensor_algebra(algebra, opposite_algebra(algebra), name=f"{algebra.name}^e")


LElement = FreeVector  # over (base label, generator index)


class LieRinehartAlgebra:
    """
    Lie-Rinehart algebra (A, L) with L free over the commutative base A.

    Brackets and anchors are given on generators; everything else follows from the
    Leibniz rule [X, aY] = a[X, Y] + X(a)Y. An optional character ∂ : L → A defines
    the right V L-action a ⊲ X = a ∂X − X(a) on the base.
    """

    def __init__(self, base: StructureConstantAlgebra, generators: Sequence[str],
                 brackets: Optional[Mapping[Tuple[int, int], LElement]] = None,
                 anchors: Optional[Mapping[Tuple[int, Label], FreeVector]] = None,
                 character: Optional[Mapping[int, FreeVector]] = None,
                 name: str = 'L'):
        if not base.commutative:
            raise StructureError(f"Base algebra {base.name} of a Lie-Rinehart algebra must be commutative")
        one = base.unit_label()
        if one is None:
            raise StructureError(f"The unit of {base.name} must be a basis label")
        self.base = base
        self.one = one
        self.name = name
        self.generators = list(generators)
        self.rank = len(self.generators)
        self._brackets: Dict[Tuple[int, int], LElement] = {}
        for (i, j), value in (brackets or {}).items():
            self._check_index(i)
            self._check_index(j)
            if i == j:
                if value:
                    raise StructureError(f"[X{i}, X{i}] must vanish")
                continue
            if (j, i) in self._brackets and self._brackets[(j, i)] != value.scale(-1):
                raise StructureError(f"Bracket table is not antisymmetric at {(i, j)}")
            self._brackets[(i, j)] = value
            self._brackets[(j, i)] = value.scale(-1)
        self._anchors = dict(anchors or {})
        self.character_table = dict(character) if character is not None else None
        self.validate()

    def _check_index(self, i: int) -> None:
        if not 0 <= i < self.rank:
            raise StructureError(f"Generator index {i} out of range")

    def generator(self, i: int) -> LElement:
        return FreeVector.basis((self.one, i))

    def bracket_generators(self, i: int, j: int) -> LElement:
        return self._brackets.get((i, j), FreeVector.zero())

    def anchor_generator(self, i: int, a: Label) -> FreeVector:
        return self._anchors.get((i, a), FreeVector.zero())

    def anchor(self, x: LElement, a: FreeVector) -> FreeVector:
        """(Σ c·b X_i)(a) = Σ c·b·X_i(a)."""
        acc = Accumulator()
        for (b, i), c in x.terms():
            for label, ca in a.terms():
                acc.add_vector(self.base.multiply(FreeVector.basis(b),
                                                  self.anchor_generator(i, label)), c * ca)
        return acc.result()

    def scale(self, a: FreeVector, x: LElement) -> LElement:
        """Base-module action a·X."""
        acc = Accumulator()
        for label, ca in a.terms():
            for (b, i), c in x.terms():
                for d, cd in self.base.multiply_basis(label, b).terms():
                    acc.add((d, i), ca * c * cd)
        return acc.result()

    def bracket(self, x: LElement, y: LElement) -> LElement:
        acc = Accumulator()
        for (a, i), cx in x.terms():
            for (b, j), cy in y.terms():
                ea, eb = FreeVector.basis(a), FreeVector.basis(b)
                ab = self.base.multiply(ea, eb)
                acc.add_vector(self.scale(ab, self.bracket_generators(i, j)), cx * cy)
                acc.add_vector(self.scale(self.base.multiply(ea, self.anchor(
                    self.generator(i), eb)), self.generator(j)), cx * cy)
                acc.add_vector(self.scale(self.base.multiply(eb, self.anchor(
                    self.generator(j), ea)), self.generator(i)), -cx * cy)
        return acc.result()

    def character(self, x: LElement) -> FreeVector:
        """∂(aX) = a ∂X − X(a); zero when no character was supplied."""
        if self.character_table is None:
            return FreeVector.zero()
        acc = Accumulator()
        for (a, i), c in x.terms():
            ea = FreeVector.basis(a)
            acc.add_vector(self.base.multiply(
                ea, self.character_table.get(i, FreeVector.zero())), c)
            acc.add_vector(self.anchor(self.generator(i), ea), -c)
        return acc.result()

    def validate(self) -> None:
        """
        Check the Lie-Rinehart axioms on generators and base basis elements.

        Raises:
            StructureError: With the first failing witness
        """
        labels = self.base.labels
        for i in range(self.rank):
            for a, b in cartesian(labels, repeat=2):
                ea, eb = FreeVector.basis(a), FreeVector.basis(b)
                lhs = self.anchor(self.generator(i), self.base.multiply(ea, eb))
                rhs = (self.base.multiply(self.anchor(self.generator(i), ea), eb)
                       + self.base.multiply(ea, self.anchor(self.generator(i), eb)))
                if lhs != rhs:
                    raise StructureError("Anchor is not a derivation",
                                         witness=f"X{i} on ({a!r}, {b!r})")
        for i, j in cartesian(range(self.rank), repeat=2):
            xi, xj = self.generator(i), self.generator(j)
            for a in labels:
                ea = FreeVector.basis(a)
                lhs = self.anchor(self.bracket(xi, xj), ea)
                rhs = self.anchor(xi, self.anchor(xj, ea)) - self.anchor(xj, self.anchor(xi, ea))
                if lhs != rhs:
                    raise StructureError("Anchor does not preserve brackets",
                                         witness=f"[X{i}, X{j}] on {a!r}")
        for i, j, k in combinations_with_replacement(range(self.rank), 3):
            xi, xj, xk = self.generator(i), self.generator(j), self.generator(k)
            jacobi = (self.bracket(xi, self.bracket(xj, xk))
                      + self.bracket(xj, self.bracket(xk, xi))
                      + self.bracket(xk, self.bracket(xi, xj)))
            if jacobi:
                raise StructureError("Jacobi identity fails", witness=f"(X{i}, X{j}, X{k})")
        if self.character_table is not None:
            for i, j in cartesian(range(self.rank), repeat=2):
                xi, xj = self.generator(i), self.generator(j)
                lhs = self.character(self.bracket(xi, xj))
                rhs = self.anchor(xi, self.character(xj)) - self.anchor(xj, self.character(xi))
                if lhs != rhs:
                    raise StructureError("Character does not define a right action",
                                         witness=f"∂[X{i}, X{j}]")

    def right_action_generator(self, a: FreeVector, i: int) -> FreeVector:
        """a ⊲ X_i = a ∂X_i − X_i(a)."""
        return (self.base.multiply(a, self.character(self.generator(i)))
                - self.anchor(self.generator(i), a))


def abelian_lie_rinehart(rank: int, base: Optional[StructureConstantAlgebra] = None
                         ) -> LieRinehartAlgebra:
    base = base or scalar_algebra()
    return LieRinehartAlgebra(base, [f"e{i + 1}" for i in range(rank)],
                              name=f"abelian{rank}", character={})


def heisenberg_lie_rinehart() -> LieRinehartAlgebra:
    """[e₁, e₂] = e₃ over A = ℚ, trivial anchor, ∂ = 0."""
    base = scalar_algebra()
    return LieRinehartAlgebra(base, ['e1', 'e2', 'e3'],
                              brackets={(0, 1): FreeVector.basis(('1', 2))},
                              name='heisenberg', character={})


def dual_numbers_lie_rinehart() -> LieRinehartAlgebra:
    """
    Rank 2 over ℚ[x]/(x²): X₁(x) = x, X₂ acts trivially, [X₁, X₂] = X₂, ∂X₁ = 1.
    """
    base = truncated_polynomial_algebra(['x'])
    return LieRinehartAlgebra(
        base, ['X1', 'X2'],
        brackets={(0, 1): FreeVector.basis(('1', 1))},
        anchors={(0, 'x'): FreeVector.basis('x')},
        character={0: FreeVector.basis('1')},
        name='dual_numbers_lr')


PBWLabel = Tuple[Label, Tuple[int, ...]]


class PBWCarrier(Carrier):
    """
    Enveloping algebra V L of a Lie-Rinehart algebra in PBW normal form.

    Basis labels are (a, (k₁,…,k_r)) standing for a·X₁^{k₁}⋯X_r^{k_r}, the base
    coefficient on the left and generators in declared order. Products are
    straightened with XY − YX = [X, Y] and X·a = a·X + X(a).
    """

    is_finite = False

    def __init__(self, lie: LieRinehartAlgebra, name: Optional[str] = None):
        super().__init__()
        self.lie = lie
        self.base = lie.base
        self.name = name or f"V({lie.name})"
        self.rank = lie.rank
        self.commutative = lie.rank == 0
        self.zero_exponents = tuple(0 for _ in range(self.rank))
        self._straightened: Dict[Tuple[int, Tuple[int, ...]], FreeVector] = {}

    def basis(self) -> List[Label]:
        raise PreconditionError(f"{self.name} is infinite-dimensional")

    def basis_up_to(self, degree: int) -> List[PBWLabel]:
        """PBW monomials of filtration degree at most ``degree``."""
        return [(a, exps) for exps in self.exponents_up_to(degree) for a in self.base.labels]

    def exponents_up_to(self, degree: int) -> List[Tuple[int, ...]]:
        result = [e for e in cartesian(range(degree + 1), repeat=self.rank) if sum(e) <= degree]
        return sorted(result, key=lambda e: (sum(e), tuple(-v for v in e)))

    def unit(self) -> FreeVector:
        return FreeVector.basis((self.lie.one, self.zero_exponents))

    def has_label(self, label: Label) -> bool:
        return (isinstance(label, tuple) and len(label) == 2
                and self.base.has_label(label[0])
                and isinstance(label[1], tuple) and len(label[1]) == self.rank)

    @staticmethod
    def degree(label: PBWLabel) -> int:
        return sum(label[1])

    def monomial(self, exponents: Sequence[int], base_label: Optional[Label] = None
                 ) -> FreeVector:
        return FreeVector.basis((base_label or self.lie.one, tuple(exponents)))

    def generator(self, i: int) -> FreeVector:
        exps = tuple(1 if k == i else 0 for k in range(self.rank))
        return FreeVector.basis((self.lie.one, exps))

    def from_base(self, a: FreeVector) -> FreeVector:
        return a.map_labels(lambda label: (label, self.zero_exponents))

    def from_lie(self, x: LElement) -> FreeVector:
        return x.map_labels(lambda label: (label[0], tuple(
            1 if k == label[1] else 0 for k in range(self.rank))))

    def _base_left(self, a: Label, vector: FreeVector) -> FreeVector:
        acc = Accumulator()
        for (b, exps), c in vector.terms():
            for d, cd in self.base.multiply_basis(a, b).terms():
                acc.add((d, exps), c * cd)
        return acc.result()

    def _generator_times_monomial(self, i: int, exps: Tuple[int, ...]) -> FreeVector:
        """X_i · X^exps with the result straightened."""
        key = (i, exps)
        cached = self._straightened.get(key)
        if cached is not None:
            return cached
        with self._lock:
            first = next((k for k, e in enumerate(exps) if e), None)
            if first is None or i <= first:
                bumped = tuple(e + 1 if k == i else e for k, e in enumerate(exps))
                result = FreeVector.basis((self.lie.one, bumped))
            else:
                rest = tuple(e - 1 if k == first else e for k, e in enumerate(exps))
                swapped = self._left_generator(first, self._generator_times_monomial(i, rest))
                commutator = self.multiply(self.from_lie(self.lie.bracket_generators(i, first)),
                                           FreeVector.basis((self.lie.one, rest)))
                result = swapped + commutator
            self._straightened[key] = result
            return result

    def _left_generator(self, i: int, vector: FreeVector) -> FreeVector:
        """X_i · (b X^n) = b (X_i X^n) + X_i(b) X^n."""
        acc = Accumulator()
        for (b, exps), c in vector.terms():
            acc.add_vector(self._base_left(b, self._generator_times_monomial(i, exps)), c)
            for d, cd in self.lie.anchor_generator(i, b).terms():
                acc.add((d, exps), c * cd)
        return acc.result()

    def _compute_product(self, x: PBWLabel, y: PBWLabel) -> FreeVector:
        a, exps = x
        vector = FreeVector.basis(y)
        for i in reversed(range(self.rank)):
            for _ in range(exps[i]):
                vector = self._left_generator(i, vector)
        return self._base_left(a, vector)

    def word(self, exponents: Sequence[int]) -> List[int]:
        """The generator indices of X^exponents in product order."""
        return [i for i, e in enumerate(exponents) for _ in range(e)]

    def word_product(self, indices: Iterable[int]) -> FreeVector:
        result = self.unit()
        for i in indices:
            result = self.multiply(result, self.generator(i))
        return result

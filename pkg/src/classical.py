#!/usr/bin/env python3
"""
Classical Oracles

Exterior algebras ⋀_A L of a Lie-Rinehart algebra with the Schouten bracket and the
Koszul generator b_L, and the antisymmetrisation map into cotor cochains over V L.
These are computed independently of the operad layer and used to cross-check it.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product as cartesian
from math import comb, factorial
from typing import List, Optional, Sequence, Tuple

from algebra import LieRinehartAlgebra
from bialgebroid import LeftHopfAlgebroid, build_vl
from coefficients import base_module, lie_rinehart_right_action
from complexes import CotorComplex
from exceptions import PreconditionError
from homology import homology_table
from linalg import Accumulator, FreeVector, Label
from operad import CotorOperad, desuspend, sign
from reports import CheckResult, run_check

logger = logging.getLogger(__name__)

WedgeLabel = Tuple[Label, Tuple[int, ...]]


def permutation_sign(indices: Sequence[int]) -> int:
    inversions = sum(1 for a, b in combinations(indices, 2) if a > b)
    return sign(inversions)


@dataclass(frozen=True)
class ExteriorElement:
    """A homogeneous element of ⋀^degree_A L over labels (a, (i₁ < … < i_degree))."""

    degree: int
    vector: FreeVector

    def __add__(self, other: 'ExteriorElement') -> 'ExteriorElement':
        if not other.vector.is_zero() and not self.vector.is_zero() and other.degree != self.degree:
            raise ValueError(f"Cannot add exterior elements of degrees {self.degree} and {other.degree}")
        degree = self.degree if not self.vector.is_zero() else other.degree
        return ExteriorElement(degree, self.vector + other.vector)

    def __sub__(self, other: 'ExteriorElement') -> 'ExteriorElement':
        return self + other.scale(-1)

    def scale(self, coeff) -> 'ExteriorElement':
        return ExteriorElement(self.degree, self.vector.scale(coeff))

    def is_zero(self) -> bool:
        return self.vector.is_zero()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExteriorElement):
            return NotImplemented
        if self.vector.is_zero() and other.vector.is_zero():
            return True
        return self.degree == other.degree and self.vector == other.vector

    def __hash__(self) -> int:
        return hash(self.vector)


class ExteriorAlgebra:
    """
    ⋀^•_A L for a Lie-Rinehart algebra (A, L) with L free on its generators.

    Brackets of degree-0 elements follow the Gerstenhaber extension through the anchor:
    [X, a] = X(a), [a, X] = −X(a) and [a, b] = 0.
    """

    def __init__(self, lie: LieRinehartAlgebra):
        self.lie = lie
        self.base = lie.base
        self.one = lie.one

    def basis(self, degree: int) -> List[ExteriorElement]:
        return [self.monomial(indices, a)
                for indices in combinations(range(self.lie.rank), degree)
                for a in self.base.basis()]

    def monomial(self, indices: Sequence[int], a: Optional[Label] = None) -> ExteriorElement:
        a = self.one if a is None else a
        return ExteriorElement(len(indices), self._normal_form(a, tuple(indices), 1))

    def from_lie(self, x: FreeVector) -> ExteriorElement:
        return ExteriorElement(1, x.map_labels(lambda label: (label[0], (label[1],))))

    def from_base(self, a: FreeVector) -> ExteriorElement:
        return ExteriorElement(0, a.map_labels(lambda label: (label, ())))

    def _normal_form(self, a: Label, indices: Tuple[int, ...], coeff) -> FreeVector:
        if len(set(indices)) < len(indices):
            return FreeVector.zero()
        return FreeVector.basis((a, tuple(sorted(indices))), coeff * permutation_sign(indices))

    def wedge(self, x: ExteriorElement, y: ExteriorElement) -> ExteriorElement:
        acc = Accumulator()
        for (a, I), c in x.vector.terms():
            for (b, J), d in y.vector.terms():
                for ab, cab in self.base.multiply_basis(a, b).terms():
                    acc.add_vector(self._normal_form(ab, I + J, c * d * cab))
        return ExteriorElement(x.degree + y.degree, acc.result())

    def wedge_all(self, factors: Sequence[ExteriorElement]) -> ExteriorElement:
        result = self.from_base(self.base.unit())
        for factor in factors:
            result = self.wedge(result, factor)
        return result

    def factors(self, label: WedgeLabel) -> List[FreeVector]:
        """a X_{i₁}∧⋯∧X_{i_p} as the L-elements (a X_{i₁}, X_{i₂}, …, X_{i_p})."""
        a, indices = label
        return [FreeVector.basis((a if k == 0 else self.one, i)) for k, i in enumerate(indices)]

    def _rest(self, factors: List[FreeVector], skip: Sequence[int]) -> ExteriorElement:
        return self.wedge_all([self.from_lie(x) for k, x in enumerate(factors) if k not in skip])

    # -- Schouten bracket -------------------------------------------------

    def _bracket_function(self, a: Label, y_label: WedgeLabel) -> ExteriorElement:
        """[a, Y₁∧⋯∧Y_q] = Σ_j (−1)^{j−1} [a, Y_j] Y₁∧⋯Ŷ_j⋯∧Y_q with [a, Y] = −Y(a)."""
        ys = self.factors(y_label)
        q = len(ys)
        acc = Accumulator()
        for j, y in enumerate(ys):
            value = self.lie.anchor(y, FreeVector.basis(a)).scale(-sign(j))
            acc.add_vector(self.wedge(self.from_base(value), self._rest(ys, [j])).vector)
        return ExteriorElement(max(q - 1, 0), acc.result())

    def schouten_bracket(self, x: ExteriorElement, y: ExteriorElement) -> ExteriorElement:
        """
        [X₁∧⋯∧X_p, Y₁∧⋯∧Y_q] = Σ_{i,j} (−1)^{i+j} [X_i, Y_j] ∧ X₁⋯X̂_i⋯X_p ∧ Y₁⋯Ŷ_j⋯Y_q,
        extended to functions through the anchor.
        """
        p, q = x.degree, y.degree
        degree = p + q - 1
        acc = Accumulator()
        for (label_x, c), (label_y, d) in cartesian(list(x.vector.terms()), list(y.vector.terms())):
            if p == 0 and q == 0:
                continue
            if p == 0:
                acc.add_vector(self._bracket_function(label_x[0], label_y).vector, c * d)
                continue
            if q == 0:
                acc.add_vector(self._bracket_function(label_y[0], label_x).vector, c * d * sign(p))
                continue
            xs, ys = self.factors(label_x), self.factors(label_y)
            for i, j in cartesian(range(p), range(q)):
                head = self.from_lie(self.lie.bracket(xs[i], ys[j]))
                tail = self.wedge(self._rest(xs, [i]), self._rest(ys, [j]))
                acc.add_vector(self.wedge(head, tail).vector, c * d * sign(i + j))
        return ExteriorElement(max(degree, 0), acc.result())

    # -- Koszul generator -------------------------------------------------

    def koszul_generator(self, x: ExteriorElement) -> ExteriorElement:
        """
        b_L(X₁∧⋯∧X_n) = Σ_i (−1)^{i+1} ∂(X_i) X₁⋯X̂_i⋯X_n
        + Σ_{i<j} (−1)^{i+j} [X_i, X_j] ∧ X₁⋯X̂_i⋯X̂_j⋯X_n.

        Raises:
            PreconditionError: Without a character ∂
        """
        if self.lie.character_table is None:
            raise PreconditionError(f"{self.lie.name} carries no character ∂")
        n = x.degree
        if n == 0:
            return ExteriorElement(0, FreeVector.zero())
        acc = Accumulator()
        for label, c in x.vector.terms():
            xs = self.factors(label)
            for i, xi in enumerate(xs):
                scalar = self.from_base(self.lie.character(xi))
                acc.add_vector(self.wedge(scalar, self._rest(xs, [i])).vector, c * sign(i))
            for i, j in combinations(range(n), 2):
                head = self.from_lie(self.lie.bracket(xs[i], xs[j]))
                acc.add_vector(self.wedge(head, self._rest(xs, [i, j])).vector, c * sign(i + j))
        return ExteriorElement(n - 1, acc.result())

    def generated_bracket(self, x: ExteriorElement, y: ExteriorElement) -> ExteriorElement:
        """(−1)^p (b_L(x∧y) − b_L(x)∧y − (−1)^p x∧b_L(y))"""
        b = self.koszul_generator
        p = x.degree
        value = b(self.wedge(x, y)) - self.wedge(b(x), y) - self.wedge(x, b(y)).scale(sign(p))
        return value.scale(sign(p))


class ClassicalOracle:
    """
    Cross-checks between ⋀_A L and the cotor cochains of V L with coefficients in A.
    """

    def __init__(self, lie: LieRinehartAlgebra, hopf: Optional[LeftHopfAlgebroid] = None):
        self.lie = lie
        self.exterior = ExteriorAlgebra(lie)
        self.hopf = hopf or build_vl(lie)
        self.carrier = self.hopf.carrier
        right = lie_rinehart_right_action(self.hopf) if lie.character_table is not None else None
        self.module = base_module(self.hopf, right_action=right)
        self.cotor = CotorComplex(self.hopf, self.module, normalized=True)
        logger.info(f"Classical oracle for {lie.name} of rank {lie.rank}")

    def alt(self, x: ExteriorElement) -> FreeVector:
        """X₁∧⋯∧X_n ↦ (1/n!) Σ_σ (−1)^σ (X_σ(1), …, X_σ(n), 1_A)"""
        n = x.degree
        zero = self.carrier.zero_exponents
        one = self.lie.one

        def generator(i):
            exps = list(zero)
            exps[i] = 1
            return tuple(exps)

        acc = Accumulator()
        weight = Fraction(1, factorial(n))
        for (a, indices), c in x.vector.terms():
            if n == 0:
                acc.add((a,), c)
                continue
            for order in permutations(range(n)):
                entries = [(a if k == 0 else one, generator(indices[order[k]])) for k in range(n)]
                acc.add(tuple(entries) + (one,), c * weight * permutation_sign(order))
        return self.cotor.nf(n, acc.result())

    def _basis_up_to(self, max_degree: int) -> List[ExteriorElement]:
        return [x for p in range(max_degree + 1) for x in self.exterior.basis(p)]

    def _require_scalar_base(self) -> None:
        if self.lie.base.dimension != 1:
            raise PreconditionError("Weight-graded cotor tables need base ℚ")

    def weighted_cotor_dimensions(self, weight: int) -> List[int]:
        """Cotor dimensions of the weight-``weight`` subcomplex in degrees 0..weight."""
        self._require_scalar_base()
        complex_ = CotorComplex(self.hopf, self.module, normalized=True, weight=weight)
        return homology_table(complex_, max_degree=weight).table()

    def checks(self, max_degree: int = 3, bracket_degree: int = 2) -> List[CheckResult]:
        E = self.exterior
        cotor = self.cotor
        basis = self._basis_up_to(max_degree)
        small = self._basis_up_to(bracket_degree)

        def square():
            for x in basis:
                value = E.koszul_generator(E.koszul_generator(x))
                if not value.is_zero():
                    return f"b_L²({x.vector!r}) = {value.vector!r}"
            return None

        def bv_identity():
            for x, y in cartesian(small, repeat=2):
                if E.schouten_bracket(x, y) != E.generated_bracket(x, y):
                    return f"{x.vector!r}, {y.vector!r}"
            return None

        def antisymmetry():
            for x, y in cartesian(basis, repeat=2):
                if x.degree + y.degree > max_degree + 1:
                    continue
                s = sign(desuspend(x.degree) * desuspend(y.degree))
                if E.schouten_bracket(x, y) != E.schouten_bracket(y, x).scale(-s):
                    return f"{x.vector!r}, {y.vector!r}"
            return None

        def jacobi():
            for x, y, z in cartesian(small, repeat=3):
                s = sign(desuspend(x.degree) * desuspend(y.degree))
                lhs = E.schouten_bracket(x, E.schouten_bracket(y, z))
                rhs = E.schouten_bracket(E.schouten_bracket(x, y), z) \
                    + E.schouten_bracket(y, E.schouten_bracket(x, z)).scale(s)
                if lhs != rhs:
                    return f"{x.vector!r}, {y.vector!r}, {z.vector!r}"
            return None

        def alt_beta():
            for x in basis:
                value = cotor.beta(x.degree, self.alt(x))
                if not value.is_zero():
                    return f"β(Alt({x.vector!r})) = {value!r}"
            return None

        def alt_B():
            if self.lie.character_table is None:
                raise PreconditionError(f"{self.lie.name} carries no character ∂")
            for x in basis:
                if x.degree == 0:
                    continue
                lhs = cotor.B(x.degree, self.alt(x))
                rhs = cotor.normalize(x.degree - 1, self.alt(E.koszul_generator(x)))
                if lhs != rhs:
                    return f"{x.vector!r}: {lhs!r} vs {rhs!r}"
            return None

        return [
            run_check('classical.koszul_square', 'b_L² = 0', square),
            run_check('classical.bv_generator',
                      '[x,y] = (−1)^p(b_L(x∧y) − b_L(x)∧y − (−1)^p x∧b_L(y))', bv_identity),
            run_check('classical.schouten_antisymmetry', '[x,y] = −(−1)^{|p||q|}[y,x]', antisymmetry),
            run_check('classical.schouten_jacobi',
                      '[x,[y,z]] = [[x,y],z] + (−1)^{|p||q|}[y,[x,z]]', jacobi),
            run_check('classical.alt_beta', 'β ∘ Alt = 0', alt_beta),
            run_check('classical.alt_B', 'B ∘ Alt = Alt ∘ b_L', alt_B),
        ] + self.cotor_checks(bracket_degree)

    def cotor_checks(self, max_degree: int = 2) -> List[CheckResult]:
        """Cup products of Alt-images against wedges, and the weight-graded cotor dimensions."""
        E = self.exterior

        def cup_products():
            self._require_scalar_base()
            operad = CotorOperad(self.hopf, self.module)
            complexes, results = {}, {}
            for p, q in cartesian(range(1, max_degree + 1), repeat=2):
                if p + q > max_degree:
                    continue
                w = p + q
                if w not in results:
                    complexes[w] = CotorComplex(self.hopf, self.module, normalized=True, weight=w)
                    results[w] = homology_table(complexes[w], max_degree=w)
                complex_, result = complexes[w], results[w]
                for x, y in cartesian(E.basis(p), E.basis(q)):
                    cup = operad.cup(p, self.alt(x), q, self.alt(y))
                    swapped = operad.cup(q, self.alt(y), p, self.alt(x))
                    wedge = self.alt(E.wedge(x, y))
                    if not result.is_boundary(w, complex_.normalize(w, cup - wedge)):
                        return f"Alt(x)⌣Alt(y) ≠ Alt(x∧y) for {x.vector!r}, {y.vector!r}"
                    if not result.is_boundary(w, complex_.normalize(w, cup - swapped.scale(sign(p * q)))):
                        return f"⌣ not graded commutative on {x.vector!r}, {y.vector!r}"
            return None

        def weighted():
            self._require_scalar_base()
            for w in range(max_degree + 1):
                expected = [comb(self.lie.rank, w) if p == w else 0 for p in range(w + 1)]
                found = self.weighted_cotor_dimensions(w)
                if found != expected:
                    return f"weight {w}: {found} vs {expected}"
            return None

        return [
            run_check('classical.alt_cup', 'Alt(x)⌣Alt(y) ∼ Alt(x∧y), graded commutative', cup_products),
            run_check('classical.weighted_cotor', 'dim H^p_co(V L, ℚ)_p = C(rank, p)', weighted),
        ]

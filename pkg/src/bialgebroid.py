#!/usr/bin/env python3
"""
Bialgebroids

Left bialgebroid and left Hopf algebroid descriptors, their axiom validators, the
counit action on the base and the instance builders (enveloping algebras, Hopf
algebras over ℚ, group algebras and enveloping algebras of Lie-Rinehart algebras).
"""

import logging
import threading
from itertools import product as cartesian
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from algebra import (
    Carrier, LieRinehartAlgebra, PBWCarrier, StructureConstantAlgebra,
    enveloping_algebra, scalar_algebra
)
from exceptions import InputError, PreconditionError, StructureError
from linalg import Accumulator, FreeVector, Label, tensor
from reports import CheckResult, classification, first_failure, run_check
from tensor_space import BOND_A, BOND_AOP, Endpoint, FreeDecomposition, GradedTensorSpace

logger = logging.getLogger(__name__)


class LazyTable:
    """
    Memoized map from basis labels to vectors, computed on first use.
    """

    def __init__(self, compute: Callable[[Label], FreeVector], name: str = 'table'):
        self._compute = compute
        self.name = name
        self._values: Dict[Label, FreeVector] = {}
        self._lock = threading.Lock()

    @classmethod
    def from_mapping(cls, values: Mapping[Label, FreeVector], name: str) -> 'LazyTable':
        def lookup(label: Label) -> FreeVector:
            try:
                return values[label]
            except KeyError:
                raise InputError(f"Table '{name}' has no entry for {label!r}")
        return cls(lookup, name)

    def __call__(self, label: Label) -> FreeVector:
        value = self._values.get(label)
        if value is None:
            value = self._compute(label)
            with self._lock:
                self._values[label] = value
        return value

    def apply(self, vector: FreeVector) -> FreeVector:
        return vector.apply(self)


class LeftBialgebroid:
    """
    A left bialgebroid (U, A, s, t, Δ, ε).

    Δ is stored on basis elements as a representative in U ⊗ U and read in
    U◁ ⊗_A ▷U; all comparisons happen after reduction to normal form.
    """

    def __init__(self, name: str, carrier: Carrier, base: StructureConstantAlgebra,
                 source: Callable[[Label], FreeVector], target: Callable[[Label], FreeVector],
                 coproduct: Callable[[Label], FreeVector], counit: Callable[[Label], FreeVector]):
        self.name = name
        self.carrier = carrier
        self.base = base
        self.source = source if isinstance(source, LazyTable) else LazyTable(source, 'source')
        self.target = target if isinstance(target, LazyTable) else LazyTable(target, 'target')
        self.coproduct = coproduct if isinstance(coproduct, LazyTable) else LazyTable(coproduct, 'coproduct')
        self.counit = counit if isinstance(counit, LazyTable) else LazyTable(counit, 'counit')
        one = base.unit_label()
        if one is None:
            raise StructureError(f"The unit of {base.name} must be a basis label")
        self.base_one = one
        self._decompositions: Dict[str, FreeDecomposition] = {}
        self._spaces: Dict[Tuple, GradedTensorSpace] = {}
        self._lock = threading.RLock()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r})"

    @property
    def is_finite(self) -> bool:
        return self.carrier.is_finite

    # -- structure maps on vectors ----------------------------------------

    def s(self, a: FreeVector) -> FreeVector:
        return a.apply(self.source)

    def t(self, a: FreeVector) -> FreeVector:
        return a.apply(self.target)

    def delta(self, u: FreeVector) -> FreeVector:
        return u.apply(self.coproduct)

    def epsilon(self, u: FreeVector) -> FreeVector:
        return u.apply(self.counit)

    def mul(self, *factors: FreeVector) -> FreeVector:
        return self.carrier.product(*factors)

    def unit(self) -> FreeVector:
        return self.carrier.unit()

    def iterated_coproduct(self, u: FreeVector, legs: int) -> FreeVector:
        """
        u₍₁₎ ⊗ ⋯ ⊗ u₍legs₎ as tuples, obtained by repeatedly splitting the last leg.
        """
        if legs < 1:
            raise ValueError("Need at least one leg")
        current = u.map_labels(lambda label: (label,))
        for _ in range(legs - 1):
            acc = Accumulator()
            for labels, coeff in current.terms():
                for (x, y), c in self.coproduct(labels[-1]).terms():
                    acc.add(labels[:-1] + (x, y), coeff * c)
            current = acc.result()
        return current

    def counit_action(self, u: FreeVector, a: FreeVector) -> FreeVector:
        """u·a := ε(u s(a)), the left U-action on the base."""
        return self.epsilon(self.carrier.multiply(u, self.s(a)))

    def source_equals_target_on_pbw(self) -> bool:
        return all(self.source(a) == self.target(a) for a in self.base.basis())

    # -- tensor spaces ----------------------------------------------------

    def free_decomposition(self, side: str) -> FreeDecomposition:
        with self._lock:
            if side not in self._decompositions:
                self._decompositions[side] = FreeDecomposition(self, side)
            return self._decompositions[side]

    def tensor_space(self, bonds: Sequence[str], left: Optional[Endpoint] = None,
                     right: Optional[Endpoint] = None, use_free: bool = True) -> GradedTensorSpace:
        key = (tuple(bonds), left, right, use_free)
        with self._lock:
            space = self._spaces.get(key)
            if space is None:
                space = GradedTensorSpace(self, bonds, left, right, use_free)
                self._spaces[key] = space
            return space

    def sample_labels(self, degree: int = 3) -> List[Label]:
        """All basis labels, or PBW monomials up to ``degree``."""
        if self.carrier.is_finite:
            return self.carrier.basis()
        return self.carrier.basis_up_to(degree)

    def sample_pairs(self, degree: int = 3) -> List[Tuple[Label, Label]]:
        labels = self.sample_labels(degree)
        if self.carrier.is_finite:
            return list(cartesian(labels, repeat=2))
        return [(x, y) for x, y in cartesian(labels, repeat=2)
                if PBWCarrier.degree(x) + PBWCarrier.degree(y) <= degree]


class LeftHopfAlgebroid(LeftBialgebroid):
    """
    A left bialgebroid with translation map u ↦ u₊ ⊗ u₋ read in ▸U ⊗_Aop U◁.
    """

    def __init__(self, name: str, carrier: Carrier, base: StructureConstantAlgebra,
                 source, target, coproduct, counit,
                 translation: Callable[[Label], FreeVector]):
        super().__init__(name, carrier, base, source, target, coproduct, counit)
        self.translation = (translation if isinstance(translation, LazyTable)
                            else LazyTable(translation, 'translation'))

    def translate(self, u: FreeVector) -> FreeVector:
        return u.apply(self.translation)


def _pair_product(carrier: Carrier, x: FreeVector, y: FreeVector) -> FreeVector:
    """Factorwise product of two vectors over label tuples of equal length."""
    acc = Accumulator()
    for lx, cx in x.terms():
        for ly, cy in y.terms():
            factors = [carrier.multiply_basis(a, b) for a, b in zip(lx, ly)]
            acc.add_vector(tensor(*factors), cx * cy)
    return acc.result()


def _apply_on_leg(vector: FreeVector, k: int, fn: Callable[[Label], FreeVector],
                  splits: bool = False) -> FreeVector:
    """Apply a map to leg k of tuple labels; a splitting map inserts its tuple."""
    acc = Accumulator()
    for labels, coeff in vector.terms():
        for image, c in fn(labels[k]).terms():
            inserted = image if splits else (image,)
            acc.add(labels[:k] + inserted + labels[k + 1:], coeff * c)
    return acc.result()


def _multiply_leg(carrier: Carrier, vector: FreeVector, k: int, factor: FreeVector,
                  on_left: bool) -> FreeVector:
    acc = Accumulator()
    for labels, coeff in vector.terms():
        element = FreeVector.basis(labels[k])
        product = carrier.multiply(factor, element) if on_left else carrier.multiply(element, factor)
        for image, c in product.terms():
            acc.add(labels[:k] + (image,) + labels[k + 1:], coeff * c)
    return acc.result()


def validate_bialgebroid(bialgebroid: LeftBialgebroid, pbw_degree: int = 3) -> List[CheckResult]:
    """
    Check the left bialgebroid axioms on every basis element (PBW carriers: monomials of
    degree at most ``pbw_degree``).

    Returns:
        list: One CheckResult per axiom
    """
    B = bialgebroid
    U = B.carrier
    A = B.base
    labels = B.sample_labels(pbw_degree)
    pairs = B.sample_pairs(pbw_degree)
    base_labels = A.basis()
    space_a = B.tensor_space([BOND_A])
    space_aa = B.tensor_space([BOND_A, BOND_A])
    e = FreeVector.basis

    def same(space, x, y):
        return space.normal_form(x - y).is_zero()

    checks = []
    checks.append(run_check(
        'bialgebroid.source_algebra_map', 's(ab) = s(a)s(b), s(1) = 1',
        lambda: first_failure(
            cartesian(base_labels, repeat=2),
            lambda ab: B.s(A.multiply_basis(*ab)) == U.multiply(B.source(ab[0]), B.source(ab[1]))
        ) or (None if B.s(A.unit()) == U.unit() else 's(1)')))
    checks.append(run_check(
        'bialgebroid.target_anti_algebra_map', 't(ab) = t(b)t(a), t(1) = 1',
        lambda: first_failure(
            cartesian(base_labels, repeat=2),
            lambda ab: B.t(A.multiply_basis(*ab)) == U.multiply(B.target(ab[1]), B.target(ab[0]))
        ) or (None if B.t(A.unit()) == U.unit() else 't(1)')))
    checks.append(run_check(
        'bialgebroid.source_target_commute', 's(a)t(b) = t(b)s(a)',
        lambda: first_failure(
            cartesian(base_labels, repeat=2),
            lambda ab: U.multiply(B.source(ab[0]), B.target(ab[1]))
            == U.multiply(B.target(ab[1]), B.source(ab[0])))))

    def takeuchi(item):
        u, a = item
        d = B.coproduct(u)
        left = _multiply_leg(U, d, 0, B.target(a), on_left=False)
        right = _multiply_leg(U, d, 1, B.source(a), on_left=False)
        return same(space_a, left, right)

    checks.append(run_check(
        'bialgebroid.takeuchi', 'Σ a ▸ u_i ⊗_A v_i = Σ u_i ⊗_A v_i ◂ a',
        lambda: first_failure(cartesian(labels, base_labels), takeuchi)))

    def coassociative(u):
        d = B.coproduct(u)
        left = _apply_on_leg(d, 0, B.coproduct, splits=True)
        right = _apply_on_leg(d, 1, B.coproduct, splits=True)
        return same(space_aa, left, right)

    checks.append(run_check('bialgebroid.coassociativity', '(Δ ⊗ id)Δ = (id ⊗ Δ)Δ',
                            lambda: first_failure(labels, coassociative)))

    def counital(u):
        d = B.coproduct(u)
        target = e(u)
        left = Accumulator()
        right = Accumulator()
        for (x, y), c in d.terms():
            left.add_vector(U.multiply(B.s(B.counit(x)), e(y)), c)
            right.add_vector(U.multiply(B.t(B.counit(y)), e(x)), c)
        return left.result() == target and right.result() == target

    checks.append(run_check('bialgebroid.counit', 'ε(u₍₁₎) ▷ u₍₂₎ = u = u₍₁₎ ◁ ε(u₍₂₎)',
                            lambda: first_failure(labels, counital)))

    def coproduct_bimodule(item):
        u, a, b = item
        sa, tb = B.source(a), B.target(b)
        lhs = B.delta(U.product(sa, tb, e(u)))
        rhs = _multiply_leg(U, _multiply_leg(U, B.coproduct(u), 0, sa, on_left=True),
                            1, tb, on_left=True)
        return same(space_a, lhs, rhs)

    checks.append(run_check(
        'bialgebroid.coproduct_bimodule', 'Δ(s(a)t(b)u) = s(a)u₍₁₎ ⊗_A t(b)u₍₂₎',
        lambda: first_failure(cartesian(labels, base_labels, base_labels), coproduct_bimodule)))

    checks.append(run_check(
        'bialgebroid.coproduct_multiplicative', 'Δ(uv) = Δ(u)Δ(v)',
        lambda: first_failure(pairs, lambda uv: same(
            space_a, B.delta(U.multiply_basis(*uv)),
            _pair_product(U, B.coproduct(uv[0]), B.coproduct(uv[1]))))))

    checks.append(run_check(
        'bialgebroid.unit', 'Δ(1) = 1 ⊗_A 1, ε(1) = 1',
        lambda: None if (same(space_a, B.delta(U.unit()), tensor(U.unit(), U.unit()))
                         and B.epsilon(U.unit()) == A.unit()) else '1_U'))

    def counit_bimodule(item):
        u, a, b = item
        lhs = B.epsilon(U.product(B.source(a), B.target(b), e(u)))
        rhs = A.product(e(a), B.counit(u), e(b))
        return lhs == rhs

    checks.append(run_check(
        'bialgebroid.counit_bimodule', 'ε(s(a)t(b)u) = a ε(u) b',
        lambda: first_failure(cartesian(labels, base_labels, base_labels), counit_bimodule)))

    def counit_products(uv):
        u, v = uv
        eu = e(u)
        middle = B.epsilon(U.multiply_basis(u, v))
        via_s = B.epsilon(U.multiply(eu, B.s(B.counit(v))))
        via_t = B.epsilon(U.multiply(eu, B.t(B.counit(v))))
        return via_s == middle == via_t

    checks.append(run_check(
        'bialgebroid.counit_action', 'ε(u s(ε(v))) = ε(uv) = ε(u t(ε(v)))',
        lambda: first_failure(pairs, counit_products)))

    def left_module(item):
        (u, v), a = item
        ea = e(a)
        lhs = B.counit_action(U.multiply_basis(u, v), ea)
        rhs = B.counit_action(e(u), B.counit_action(e(v), ea))
        return lhs == rhs

    checks.append(run_check(
        'bialgebroid.left_module', '(uv)·a = u·(v·a) with u·a = ε(u ◂ a)',
        lambda: first_failure(cartesian(pairs, base_labels), left_module)))
    return checks


def validate_hopf(hopf: LeftHopfAlgebroid, pbw_degree: int = 3) -> List[CheckResult]:
    """
    Check the translation-map identities Sch1–Sch9 on basis elements.

    Returns:
        list: One CheckResult per identity
    """
    H = hopf
    U = H.carrier
    labels = H.sample_labels(pbw_degree)
    pairs = H.sample_pairs(pbw_degree)
    base_labels = H.base.basis()
    space_a = H.tensor_space([BOND_A])
    space_aop = H.tensor_space([BOND_AOP])
    space_a_aop = H.tensor_space([BOND_A, BOND_AOP])
    space_aop_a = H.tensor_space([BOND_AOP, BOND_A])
    e = FreeVector.basis
    one = U.unit()

    def same(space, x, y):
        return space.normal_form(x - y).is_zero()

    def sch1(item):
        u, a = item
        beta = H.translation(u)
        left = _multiply_leg(U, beta, 0, H.target(a), on_left=True)
        right = _multiply_leg(U, beta, 1, H.target(a), on_left=False)
        return same(space_aop, left, right)

    def sch2(u):
        beta = H.translation(u)
        acc = Accumulator()
        for (plus, minus), c in beta.terms():
            for (x, y), d in H.coproduct(plus).terms():
                acc.add_vector(tensor(e(x), U.multiply_basis(y, minus)), c * d)
        return same(space_a, acc.result(), tensor(e(u), one))

    def sch3(u):
        acc = Accumulator()
        for (x, y), c in H.coproduct(u).terms():
            for (plus, minus), d in H.translation(x).terms():
                acc.add_vector(tensor(e(plus), U.multiply_basis(minus, y)), c * d)
        return same(space_aop, acc.result(), tensor(e(u), one))

    def sch4(u):
        left = _apply_on_leg(H.translation(u), 0, H.coproduct, splits=True)
        right = _apply_on_leg(H.coproduct(u), 1, H.translation, splits=True)
        return same(space_a_aop, left, right)

    def sch5(u):
        beta = H.translation(u)
        left = _apply_on_leg(beta, 1, H.coproduct, splits=True)
        acc = Accumulator()
        for (plus, minus), c in beta.terms():
            for (pp, pm), d in H.translation(plus).terms():
                acc.add((pp, minus, pm), c * d)
        return same(space_aop_a, left, acc.result())

    def sch6(uv):
        u, v = uv
        lhs = H.translate(U.multiply_basis(u, v))
        acc = Accumulator()
        for (up, um), c in H.translation(u).terms():
            for (vp, vm), d in H.translation(v).terms():
                acc.add_vector(tensor(U.multiply_basis(up, vp), U.multiply_basis(vm, um)), c * d)
        return same(space_aop, lhs, acc.result())

    def sch7(u):
        acc = Accumulator()
        for (plus, minus), c in H.translation(u).terms():
            acc.add_vector(U.multiply_basis(plus, minus), c)
        return acc.result() == H.s(H.counit(u))

    def sch8(u):
        acc = Accumulator()
        for (plus, minus), c in H.translation(u).terms():
            acc.add_vector(U.multiply(e(plus), H.t(H.counit(minus))), c)
        return acc.result() == e(u)

    def sch9(ab):
        a, b = ab
        lhs = H.translate(U.multiply(H.source(a), H.target(b)))
        return same(space_aop, lhs, tensor(H.source(a), H.source(b)))

    return [
        run_check('hopf.sch1', 'u₊ ⊗_Aop u₋ ∈ U ×_Aop U',
                  lambda: first_failure(cartesian(labels, base_labels), sch1)),
        run_check('hopf.sch2', 'u₊₍₁₎ ⊗_A u₊₍₂₎u₋ = u ⊗_A 1',
                  lambda: first_failure(labels, sch2)),
        run_check('hopf.sch3', 'u₍₁₎₊ ⊗_Aop u₍₁₎₋u₍₂₎ = u ⊗_Aop 1',
                  lambda: first_failure(labels, sch3)),
        run_check('hopf.sch4', 'u₊₍₁₎ ⊗_A u₊₍₂₎ ⊗_Aop u₋ = u₍₁₎ ⊗_A u₍₂₎₊ ⊗_Aop u₍₂₎₋',
                  lambda: first_failure(labels, sch4)),
        run_check('hopf.sch5', 'u₊ ⊗_Aop u₋₍₁₎ ⊗_A u₋₍₂₎ = u₊₊ ⊗_Aop u₋ ⊗_A u₊₋',
                  lambda: first_failure(labels, sch5)),
        run_check('hopf.sch6', '(uv)₊ ⊗_Aop (uv)₋ = u₊v₊ ⊗_Aop v₋u₋',
                  lambda: first_failure(pairs, sch6)),
        run_check('hopf.sch7', 'u₊u₋ = s(ε(u))', lambda: first_failure(labels, sch7)),
        run_check('hopf.sch8', 'u₊ t(ε(u₋)) = u', lambda: first_failure(labels, sch8)),
        run_check('hopf.sch9', '(s(a)t(b))₊ ⊗_Aop (s(a)t(b))₋ = s(a) ⊗_Aop s(b)',
                  lambda: first_failure(cartesian(base_labels, repeat=2), sch9)),
    ]


def counit_action(bialgebroid: LeftBialgebroid, u: FreeVector, a: FreeVector) -> FreeVector:
    """u·a = ε(u ◂ a) = ε(u s(a)), the left U-module structure on A."""
    return bialgebroid.counit_action(u, a)


# -- builders --------------------------------------------------------------

def build_ae(base: StructureConstantAlgebra) -> LeftHopfAlgebroid:
    """
    The enveloping Hopf algebroid Aᵉ = A ⊗ Aᵒᵖ over A with
    Δ(a⊗b) = (a⊗1) ⊗_A (1⊗b), ε(a⊗b) = ab and (a⊗b)₊ ⊗ (a⊗b)₋ = (a⊗1) ⊗ (b⊗1).
    """
    carrier = enveloping_algebra(base)
    one = base.unit()

    def source(a):
        return tensor(FreeVector.basis(a), one)

    def target(b):
        return tensor(one, FreeVector.basis(b))

    def coproduct(label):
        a, b = label
        return tensor(source(a), target(b))

    def counit(label):
        a, b = label
        return base.multiply_basis(a, b)

    def translation(label):
        a, b = label
        return tensor(source(a), source(b))

    logger.info(f"Building enveloping Hopf algebroid of {base.name}")
    return LeftHopfAlgebroid(f"{base.name}^e", carrier, base, source, target,
                             coproduct, counit, translation)


def build_hopf(algebra: StructureConstantAlgebra,
               coproduct: Mapping[Label, FreeVector], counit: Mapping[Label, object],
               antipode: Mapping[Label, FreeVector], name: Optional[str] = None) -> LeftHopfAlgebroid:
    """
    A Hopf algebra over ℚ as a left Hopf algebroid with h₊ ⊗ h₋ = h₍₁₎ ⊗ S(h₍₂₎).

    Raises:
        StructureError: If the antipode is not a convolution inverse of the identity
    """
    base = scalar_algebra()
    unit_u = algebra.unit()
    for label in algebra.basis():
        if label not in coproduct or label not in counit or label not in antipode:
            raise InputError(f"Hopf algebra tables are not total: missing {label!r}")
    delta = LazyTable.from_mapping(coproduct, 'coproduct')
    eps_values = {label: FreeVector.basis('1', value) if not isinstance(value, FreeVector) else value
                  for label, value in counit.items()}
    eps = LazyTable.from_mapping(eps_values, 'counit')
    S = LazyTable.from_mapping(antipode, 'antipode')

    for label in algebra.basis():
        left = Accumulator()
        right = Accumulator()
        for (x, y), c in delta(label).terms():
            left.add_vector(algebra.multiply(S(x), FreeVector.basis(y)), c)
            right.add_vector(algebra.multiply(FreeVector.basis(x), S(y)), c)
        expected = unit_u.scale(eps(label).coeff('1'))
        if left.result() != expected or right.result() != expected:
            raise StructureError("Antipode is not a convolution inverse of the identity",
                                 witness=repr(label))

    def translation(label):
        acc = Accumulator()
        for (x, y), c in delta(label).terms():
            acc.add_vector(tensor(FreeVector.basis(x), S(y)), c)
        return acc.result()

    def scalar_map(a):
        return unit_u

    return LeftHopfAlgebroid(name or algebra.name, algebra, base, scalar_map, scalar_map,
                             delta, eps, translation)


def build_group(algebra: StructureConstantAlgebra) -> LeftHopfAlgebroid:
    """Group algebra with grouplike Δ(g) = g ⊗ g, ε(g) = 1, S(g) = g⁻¹."""
    identity = algebra.unit_label()
    if identity is None:
        raise StructureError("Group algebra unit must be a group element")
    inverses = {}
    for g in algebra.basis():
        for h in algebra.basis():
            if algebra.multiply_basis(g, h) == FreeVector.basis(identity):
                inverses[g] = FreeVector.basis(h)
        if g not in inverses:
            raise StructureError(f"{g!r} has no inverse")
    coproduct = {g: FreeVector.basis((g, g)) for g in algebra.basis()}
    counit = {g: 1 for g in algebra.basis()}
    return build_hopf(algebra, coproduct, counit, inverses, name=algebra.name)


def build_vl(lie: LieRinehartAlgebra) -> LeftHopfAlgebroid:
    """
    V L in PBW form with Δ(X) = X ⊗_A 1 + 1 ⊗_A X, ε(X) = 0 and
    X₊ ⊗_Aop X₋ = X ⊗ 1 − 1 ⊗ X, extended multiplicatively.
    """
    carrier = PBWCarrier(lie)
    zero = carrier.zero_exponents
    one = lie.one

    def embed(a):
        return FreeVector.basis((a, zero))

    def split(exps):
        """All ways to distribute the word of ``exps`` into two ordered sub-words."""
        word = carrier.word(exps)
        for mask in cartesian((0, 1), repeat=len(word)):
            left = [0] * carrier.rank
            right_word = []
            for index, side in zip(word, mask):
                if side == 0:
                    left[index] += 1
                else:
                    right_word.append(index)
            yield tuple(left), right_word

    def coproduct(label):
        a, exps = label
        acc = Accumulator()
        for left, right_word in split(exps):
            right = [0] * carrier.rank
            for index in right_word:
                right[index] += 1
            acc.add(((a, left), (one, tuple(right))), 1)
        return acc.result()

    def counit(label):
        a, exps = label
        return FreeVector.basis(a) if not any(exps) else FreeVector.zero()

    def translation(label):
        a, exps = label
        acc = Accumulator()
        for left, right_word in split(exps):
            sign = -1 if len(right_word) % 2 else 1
            minus = carrier.word_product(reversed(right_word))
            acc.add_vector(tensor(FreeVector.basis((a, left)), minus), sign)
        return acc.result()

    logger.info(f"Building PBW Hopf algebroid V({lie.name}) of rank {lie.rank}")
    return LeftHopfAlgebroid(carrier.name, carrier, lie.base, embed, embed,
                             coproduct, counit, translation)


def antipode_from_character(hopf: LeftHopfAlgebroid,
                            character: Callable[[FreeVector], FreeVector]) -> Callable[[FreeVector], FreeVector]:
    """
    S u = u₋ ◁ ∂u₊ = t(∂u₊) u₋ for a right character ∂ of an aYD base algebra.

    Returns:
        callable: The antipode on elements
    """
    def antipode(u: FreeVector) -> FreeVector:
        acc = Accumulator()
        for (plus, minus), c in hopf.translate(u).terms():
            acc.add_vector(hopf.carrier.multiply(hopf.t(character(FreeVector.basis(plus))),
                                                 FreeVector.basis(minus)), c)
        return acc.result()
    return antipode


def check_antipode(hopf: LeftHopfAlgebroid, antipode: Callable[[FreeVector], FreeVector],
                   degree: int = 2) -> List[CheckResult]:
    """The antipode from a character is an anti-algebra map; whether S² = id is only recorded."""
    U = hopf.carrier
    pairs = hopf.sample_pairs(degree)
    labels = hopf.sample_labels(degree)
    return [
        run_check('antipode.anti_multiplicative', 'S(uv) = S(v)S(u)',
                  lambda: first_failure(pairs, lambda uv: antipode(U.multiply_basis(*uv))
                                        == U.multiply(antipode(FreeVector.basis(uv[1])),
                                                      antipode(FreeVector.basis(uv[0]))))),
        classification(run_check('antipode.involution', 'S² = id',
                                 lambda: first_failure(labels, lambda u: antipode(antipode(FreeVector.basis(u)))
                                                       == FreeVector.basis(u))), 'S² = id'),
    ]


def ensure_finite(bialgebroid: LeftBialgebroid, what: str) -> None:
    if not bialgebroid.is_finite:
        raise PreconditionError(f"{what} needs a finite-dimensional carrier; "
                                f"{bialgebroid.carrier.name} is a PBW carrier")

#!/usr/bin/env python3
"""
Coefficient Modules

Left/right U-modules, left U-comodules and (co)module algebras, with the
Yetter-Drinfel'd and anti Yetter-Drinfel'd classification and the right action induced
by a right character of the base algebra.
"""

import logging
import threading
from dataclasses import dataclass, asdict
from itertools import product as cartesian
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from bialgebroid import LeftBialgebroid, LeftHopfAlgebroid
from exceptions import PreconditionError, StructureError
from linalg import Accumulator, FreeVector, Label, tensor
from reports import SKIPPED, CheckResult, classification, first_failure, run_check
from tensor_space import BOND_A, Endpoint

logger = logging.getLogger(__name__)

Action = Callable[[Label, Label], FreeVector]


class _Memo2:
    """Two-argument memo around an action table."""

    def __init__(self, fn: Action):
        self._fn = fn
        self._values: Dict[Tuple[Label, Label], FreeVector] = {}
        self._lock = threading.Lock()

    def __call__(self, x: Label, y: Label) -> FreeVector:
        key = (x, y)
        value = self._values.get(key)
        if value is None:
            value = self._fn(x, y)
            with self._lock:
                self._values[key] = value
        return value


class CoefficientModule:
    """
    A finite-dimensional coefficient space N with any of: a left U-action, a right
    U-action, a left U-coaction n ↦ n₍₋₁₎ ⊗_A n₍₀₎, and an A-ring product.

    The coaction is read in U◁ ⊗_A N where A acts on N through ``comodule_left``:
    the left action a ▷ n = s(a)n when a left action exists, otherwise a ▸ m = m t(a).
    """

    def __init__(self, name: str, bialgebroid: LeftBialgebroid, labels: Sequence[Label],
                 left_action: Optional[Action] = None, right_action: Optional[Action] = None,
                 coaction: Optional[Callable[[Label], FreeVector]] = None,
                 product: Optional[Action] = None, unit: Optional[FreeVector] = None):
        self.name = name
        self.bialgebroid = bialgebroid
        self.labels = list(labels)
        self._left = _Memo2(left_action) if left_action else None
        self._right = _Memo2(right_action) if right_action else None
        self._coaction = coaction
        self._coaction_cache: Dict[Label, FreeVector] = {}
        self._product = _Memo2(product) if product else None
        self._unit = unit
        self._left_endpoint: Optional[Endpoint] = None
        self._right_endpoint: Optional[Endpoint] = None

    def __repr__(self) -> str:
        return f"CoefficientModule({self.name!r})"

    @property
    def has_left_action(self) -> bool:
        return self._left is not None

    @property
    def has_right_action(self) -> bool:
        return self._right is not None

    @property
    def has_coaction(self) -> bool:
        return self._coaction is not None

    @property
    def has_product(self) -> bool:
        return self._product is not None and self._unit is not None

    def basis(self) -> List[Label]:
        return list(self.labels)

    def _require(self, flag: bool, what: str) -> None:
        if not flag:
            raise PreconditionError(f"Coefficient module {self.name} has no {what}")

    # -- actions on vectors -----------------------------------------------

    def act_left(self, u: FreeVector, n: FreeVector) -> FreeVector:
        """u·n"""
        self._require(self.has_left_action, 'left U-action')
        acc = Accumulator()
        for lu, cu in u.terms():
            for ln, cn in n.terms():
                acc.add_vector(self._left(lu, ln), cu * cn)
        return acc.result()

    def act_right(self, m: FreeVector, u: FreeVector) -> FreeVector:
        """m·u"""
        self._require(self.has_right_action, 'right U-action')
        acc = Accumulator()
        for lm, cm in m.terms():
            for lu, cu in u.terms():
                acc.add_vector(self._right(lm, lu), cm * cu)
        return acc.result()

    def coaction(self, label: Label) -> FreeVector:
        self._require(self.has_coaction, 'left U-coaction')
        value = self._coaction_cache.get(label)
        if value is None:
            value = self._coaction(label)
            self._coaction_cache[label] = value
        return value

    def coact(self, n: FreeVector) -> FreeVector:
        return n.apply(self.coaction)

    def iterated_coaction(self, n: FreeVector, legs: int) -> FreeVector:
        """
        n₍₋legs₎ ⊗ ⋯ ⊗ n₍₋₁₎ ⊗ n₍₀₎ as tuples, coacting repeatedly on the N leg.
        """
        current = n.map_labels(lambda label: (label,))
        for _ in range(legs):
            acc = Accumulator()
            for labels, coeff in current.terms():
                for (u, m), c in self.coaction(labels[-1]).terms():
                    acc.add(labels[:-1] + (u, m), coeff * c)
            current = acc.result()
        return current

    def multiply(self, n: FreeVector, m: FreeVector) -> FreeVector:
        self._require(self.has_product, 'product')
        acc = Accumulator()
        for ln, cn in n.terms():
            for lm, cm in m.terms():
                acc.add_vector(self._product(ln, lm), cn * cm)
        return acc.result()

    def unit(self) -> FreeVector:
        self._require(self.has_product, 'unit')
        return self._unit

    # -- induced A-actions ------------------------------------------------

    def lact(self, a: Label, n: Label) -> FreeVector:
        """a ▷ n = s(a)n"""
        return self.act_left(self.bialgebroid.source(a), FreeVector.basis(n))

    def ract_target(self, a: Label, n: Label) -> FreeVector:
        """n ◁ a = t(a)n"""
        return self.act_left(self.bialgebroid.target(a), FreeVector.basis(n))

    def blact(self, a: Label, m: Label) -> FreeVector:
        """a ▸ m = m t(a)"""
        return self.act_right(FreeVector.basis(m), self.bialgebroid.target(a))

    def bract(self, a: Label, m: Label) -> FreeVector:
        """m ◂ a = m s(a)"""
        return self.act_right(FreeVector.basis(m), self.bialgebroid.source(a))

    def comodule_left(self, a: Label, n: Label) -> FreeVector:
        if self.has_left_action:
            return self.lact(a, n)
        return self.blact(a, n)

    def comodule_right(self, a: Label, n: Label) -> FreeVector:
        """The right A-action a comodule induces: n ↦ ε(n₍₋₁₎ s(a)) ▷ n₍₀₎."""
        B = self.bialgebroid
        acc = Accumulator()
        for (u, m), c in self.coaction(n).terms():
            eps = B.epsilon(B.carrier.multiply(FreeVector.basis(u), B.source(a)))
            for b, cb in eps.terms():
                acc.add_vector(self.comodule_left(b, m), c * cb)
        return acc.result()

    def module_right(self, a: Label, n: Label) -> FreeVector:
        """The right A-action of the module structure: n ◁ a, or m ◂ a for right modules."""
        if self.has_left_action:
            return self.ract_target(a, n)
        return self.bract(a, n)

    def lift(self, vector: FreeVector, action: Action, a: FreeVector) -> FreeVector:
        acc = Accumulator()
        for la, ca in a.terms():
            for ln, cn in vector.terms():
                acc.add_vector(action(la, ln), ca * cn)
        return acc.result()

    # -- endpoints for tensor spaces --------------------------------------

    def left_endpoint(self) -> Endpoint:
        """M as the left end of M ⊗_Aop U ⊗ ⋯ (absorbs a ▸ m = m t(a))."""
        if self._left_endpoint is None:
            self._require(self.has_right_action, 'right U-action')
            self._left_endpoint = Endpoint(self.name, self.labels, self.blact)
        return self._left_endpoint

    def right_endpoint(self) -> Endpoint:
        """N as the right end of ⋯ ⊗_A U ⊗_A N (absorbs a through the comodule's A-action)."""
        if self._right_endpoint is None:
            self._right_endpoint = Endpoint(self.name, self.labels, self.comodule_left)
        return self._right_endpoint

    def coaction_space(self, legs: int = 1):
        return self.bialgebroid.tensor_space([BOND_A] * legs, right=self.right_endpoint())


@dataclass
class FlagSet:
    """Classification record; a flag is None when the structure it needs is absent."""

    left_module: Optional[bool] = None
    right_module: Optional[bool] = None
    comodule: Optional[bool] = None
    is_left_module_algebra: Optional[bool] = None
    is_comodule_algebra: Optional[bool] = None
    is_yd: Optional[bool] = None
    is_braided_commutative: Optional[bool] = None
    is_ayd: Optional[bool] = None
    is_stable: Optional[bool] = None

    @property
    def braided_commutative_yd_algebra(self) -> bool:
        return bool(self.is_yd and self.is_braided_commutative and self.is_left_module_algebra
                    and self.is_comodule_algebra)

    @property
    def sayd(self) -> bool:
        return bool(self.is_ayd and self.is_stable)

    def to_dict(self) -> Dict[str, Optional[bool]]:
        return asdict(self)


def _samples(module: CoefficientModule, degree: int):
    B = module.bialgebroid
    return B.sample_labels(degree), module.basis(), B.base.basis()


def check_coincidence(module: CoefficientModule, degree: int = 2) -> None:
    """
    The A-bimodule structures induced by the action and by the coaction must agree.

    Raises:
        StructureError: With the first mismatching basis pair
    """
    if not module.has_coaction or not (module.has_left_action or module.has_right_action):
        return
    for a in module.bialgebroid.base.basis():
        for n in module.basis():
            if module.comodule_right(a, n) != module.module_right(a, n):
                raise StructureError(
                    f"Module and comodule structures of {module.name} induce different A-actions",
                    witness=f"a={a!r}, n={n!r}")
            if module.has_left_action and module.has_right_action:
                if module.lact(a, n) != module.blact(a, n):
                    raise StructureError(
                        f"Left and right U-actions of {module.name} induce different A-actions",
                        witness=f"a={a!r}, n={n!r}")


def module_checks(module: CoefficientModule, degree: int = 2) -> Tuple[FlagSet, List[CheckResult]]:
    """
    Recompute every flag of a coefficient module.

    Returns:
        tuple: (FlagSet, per-condition CheckResults with witnesses)
    """
    B = module.bialgebroid
    U = B.carrier
    u_labels, n_labels, a_labels = _samples(module, degree)
    pairs = B.sample_pairs(degree)
    e = FreeVector.basis
    flags = FlagSet()
    checks: List[CheckResult] = []
    name = module.name

    def record(flag_name: str, result: CheckResult) -> None:
        if result.status != SKIPPED:
            setattr(flags, flag_name, result.passed)
        if flag_name.startswith('is_'):
            result = classification(result, flag_name)
        checks.append(result)

    if module.has_left_action:
        record('left_module', run_check(
            f'{name}.left_module', '(uv)n = u(vn), 1n = n',
            lambda: first_failure(
                cartesian(pairs, n_labels),
                lambda item: module.act_left(U.multiply_basis(*item[0]), e(item[1]))
                == module.act_left(e(item[0][0]), module.act_left(e(item[0][1]), e(item[1])))
            ) or first_failure(n_labels, lambda n: module.act_left(U.unit(), e(n)) == e(n))))
    if module.has_right_action:
        record('right_module', run_check(
            f'{name}.right_module', 'm(uv) = (mu)v, m1 = m',
            lambda: first_failure(
                cartesian(n_labels, pairs),
                lambda item: module.act_right(e(item[0]), U.multiply_basis(*item[1]))
                == module.act_right(module.act_right(e(item[0]), e(item[1][0])), e(item[1][1]))
            ) or first_failure(n_labels, lambda m: module.act_right(e(m), U.unit()) == e(m))))

    if module.has_coaction:
        check_coincidence(module, degree)
        space1 = module.coaction_space(1)
        space2 = module.coaction_space(2)

        def coassociative(n):
            coaction = module.coaction(n)
            left = Accumulator()
            right = Accumulator()
            for (u, m), c in coaction.terms():
                for (x, y), d in B.coproduct(u).terms():
                    left.add((x, y, m), c * d)
                for (v, k), d in module.coaction(m).terms():
                    right.add((u, v, k), c * d)
            return space2.normal_form(left.result() - right.result()).is_zero()

        def counital(n):
            acc = Accumulator()
            for (u, m), c in module.coaction(n).terms():
                acc.add_vector(module.lift(e(m), module.comodule_left, B.counit(u)), c)
            return acc.result() == e(n)

        def takeuchi(item):
            n, a = item
            left = Accumulator()
            right = Accumulator()
            for (u, m), c in module.coaction(n).terms():
                left.add_vector(U.multiply(e(u), B.target(a)).map_labels(lambda x: (x, m)), c)
                right.add_vector(module.comodule_right(a, m).map_labels(lambda k: (u, k)), c)
            return space1.normal_form(left.result() - right.result()).is_zero()

        record('comodule', run_check(
            f'{name}.comodule', 'coassociative and counital coaction in U ⊗_A N',
            lambda: first_failure(n_labels, coassociative) or first_failure(n_labels, counital)
            or first_failure(cartesian(n_labels, a_labels), takeuchi)))

    if module.has_product:
        one = module.unit()

        def a_ring(item):
            a, n, m = item
            en, em = e(n), e(m)
            lhs1 = module.lift(module.multiply(en, em), module.comodule_left, e(a))
            rhs1 = module.multiply(module.lift(en, module.comodule_left, e(a)), em)
            lhs2 = module.multiply(en, module.lift(em, module.comodule_left, e(a)))
            rhs2 = module.multiply(module.lift(en, module.comodule_right, e(a)), em) \
                if module.has_coaction else module.multiply(module.lift(en, module.module_right, e(a)), em)
            return lhs1 == rhs1 and lhs2 == rhs2

        def associative(item):
            x, y, z = (e(v) for v in item)
            return module.multiply(module.multiply(x, y), z) == module.multiply(x, module.multiply(y, z))

        checks.append(run_check(
            f'{name}.a_ring', 'a ▷ (m·m′) = (a ▷ m)·m′, m·(a ▷ m′) = (m ◁ a)·m′, associative, unital',
            lambda: first_failure(cartesian(n_labels, repeat=3), associative)
            or first_failure(n_labels, lambda n: module.multiply(one, e(n)) == e(n)
                             == module.multiply(e(n), one))
            or first_failure(cartesian(a_labels, n_labels, n_labels), a_ring)))

        if module.has_left_action:
            def module_algebra(item):
                u, n, m = item
                lhs = module.act_left(e(u), module.multiply(e(n), e(m)))
                acc = Accumulator()
                for (x, y), c in B.coproduct(u).terms():
                    acc.add_vector(module.multiply(module.act_left(e(x), e(n)),
                                                   module.act_left(e(y), e(m))), c)
                return lhs == acc.result()

            record('is_left_module_algebra', run_check(
                f'{name}.module_algebra', 'u(m ·_M m′) = (u₍₁₎m) ·_M (u₍₂₎m′)',
                lambda: first_failure(cartesian(u_labels, n_labels, n_labels), module_algebra)
                or first_failure(u_labels, lambda u: module.act_left(e(u), one)
                                 == module.lift(one, module.comodule_left, B.counit(u)))))

        if module.has_coaction:
            def comodule_algebra(item):
                n, m = item
                lhs = module.coact(module.multiply(e(n), e(m)))
                acc = Accumulator()
                for (u, x), c in module.coaction(n).terms():
                    for (v, y), d in module.coaction(m).terms():
                        acc.add_vector(tensor(U.multiply_basis(u, v), module.multiply(e(x), e(y))), c * d)
                return module.coaction_space(1).normal_form(lhs - acc.result()).is_zero()

            def unit_coaction():
                lhs = module.coact(one)
                rhs = tensor(U.unit(), one)
                return None if module.coaction_space(1).normal_form(lhs - rhs).is_zero() else '1_N'

            record('is_comodule_algebra', run_check(
                f'{name}.comodule_algebra', '(m·m′)₍₋₁₎ ⊗ (m·m′)₍₀₎ = m₍₋₁₎m′₍₋₁₎ ⊗ m₍₀₎·m′₍₀₎',
                lambda: unit_coaction() or first_failure(cartesian(n_labels, repeat=2), comodule_algebra)))

            def braided(item):
                n, m = item
                lhs = module.multiply(e(n), e(m))
                acc = Accumulator()
                for (u, x), c in module.coaction(n).terms():
                    acc.add_vector(module.multiply(module.act_left(e(u), e(m)), e(x)), c)
                return lhs == acc.result()

            if module.has_left_action:
                record('is_braided_commutative', run_check(
                    f'{name}.braided_commutative', 'n ·_N n′ = (n₍₋₁₎n′) ·_N n₍₀₎',
                    lambda: first_failure(cartesian(n_labels, repeat=2), braided)))

    if module.has_left_action and module.has_coaction:
        space1 = module.coaction_space(1)

        def yd(item):
            u, n = item
            acc = Accumulator()
            for (x, y), c in B.coproduct(u).terms():
                for (v, m), d in module.coact(module.act_left(e(x), e(n))).terms():
                    for w, cw in U.multiply_basis(v, y).terms():
                        acc.add((w, m), c * d * cw)
                for (v, m), d in module.coaction(n).terms():
                    for w, cw in U.multiply_basis(x, v).terms():
                        for k, ck in module.act_left(e(y), e(m)).terms():
                            acc.add((w, k), -c * d * cw * ck)
            return space1.normal_form(acc.result()).is_zero()

        record('is_yd', run_check(
            f'{name}.yd', '(u₍₁₎n)₍₋₁₎u₍₂₎ ⊗_A (u₍₁₎n)₍₀₎ = u₍₁₎n₍₋₁₎ ⊗_A u₍₂₎n₍₀₎',
            lambda: first_failure(cartesian(u_labels, n_labels), yd)))

    if module.has_right_action and module.has_coaction and isinstance(B, LeftHopfAlgebroid):
        space1 = module.coaction_space(1)

        def ayd(item):
            m, u = item
            lhs = module.coact(module.act_right(e(m), e(u)))
            acc = Accumulator()
            for (plus, minus), c in B.translation(u).terms():
                for (x, y), d in B.coproduct(plus).terms():
                    for (v, k), f in module.coaction(m).terms():
                        left = U.product(e(minus), e(v), e(x))
                        right = module.act_right(e(k), e(y))
                        acc.add_vector(tensor(left, right), c * d * f)
            return space1.normal_form(lhs - acc.result()).is_zero()

        def stable(m):
            acc = Accumulator()
            for (v, k), c in module.coaction(m).terms():
                acc.add_vector(module.act_right(e(k), e(v)), c)
            return acc.result() == e(m)

        record('is_ayd', run_check(
            f'{name}.ayd', '(mu)₍₋₁₎ ⊗_A (mu)₍₀₎ = u₋m₍₋₁₎u₊₍₁₎ ⊗_A m₍₀₎u₊₍₂₎',
            lambda: first_failure(cartesian(n_labels, u_labels), ayd)))
        record('is_stable', run_check(
            f'{name}.stable', 'm₍₀₎m₍₋₁₎ = m', lambda: first_failure(n_labels, stable)))

    return flags, checks


def validate_yd(module: CoefficientModule, degree: int = 2) -> FlagSet:
    """
    Flag set of a module-comodule, requiring both structures.

    Raises:
        PreconditionError: If the action or the coaction is missing
        StructureError: If the induced A-bimodule structures differ
    """
    if not (module.has_left_action and module.has_coaction):
        raise PreconditionError(f"{module.name} needs a left action and a left coaction")
    return module_checks(module, degree)[0]


def validate_ayd(module: CoefficientModule, degree: int = 2) -> FlagSet:
    """
    aYD and stability flags of a right module left comodule.

    Raises:
        PreconditionError: If the right action or the coaction is missing
    """
    if not (module.has_right_action and module.has_coaction):
        raise PreconditionError(f"{module.name} needs a right action and a left coaction")
    if not isinstance(module.bialgebroid, LeftHopfAlgebroid):
        raise PreconditionError("anti Yetter-Drinfel'd modules need a left Hopf algebroid")
    return module_checks(module, degree)[0]


# -- constructors ----------------------------------------------------------

def base_module(bialgebroid: LeftBialgebroid,
                right_action: Optional[Action] = None, name: str = 'A') -> CoefficientModule:
    """
    The base algebra A with u·a = ε(u s(a)), coaction a ↦ s(a) ⊗_A 1 and its own
    product; optionally a right U-action (a, u) ↦ a ⊲ u.
    """
    B = bialgebroid
    A = B.base
    one = A.unit()

    def left(u, a):
        return B.counit_action(FreeVector.basis(u), FreeVector.basis(a))

    def coaction(a):
        return tensor(B.source(a), one)

    return CoefficientModule(name, B, A.basis(), left_action=left, right_action=right_action,
                             coaction=coaction, product=A.multiply_basis, unit=one)


def enveloping_right_action(bialgebroid: LeftBialgebroid) -> Action:
    """a ⊲ (b ⊗ c) = c a b on the base of Aᵉ."""
    A = bialgebroid.base

    def action(a, u):
        b, c = u
        return A.product(FreeVector.basis(c), FreeVector.basis(a), FreeVector.basis(b))
    return action


def counit_right_action(bialgebroid: LeftBialgebroid) -> Action:
    """a ⊲ u = a ε(u); a right action whenever ε is multiplicative (e.g. Hopf algebras)."""
    A = bialgebroid.base

    def action(a, u):
        return A.multiply(FreeVector.basis(a), bialgebroid.counit(u))
    return action


def lie_rinehart_right_action(hopf: LeftHopfAlgebroid) -> Action:
    """a ⊲ (b X_{i₁}⋯X_{i_k}) = (((ab) ⊲ X_{i₁}) ⋯) ⊲ X_{i_k} with a ⊲ X = a∂X − X(a)."""
    carrier = hopf.carrier
    lie = carrier.lie
    A = hopf.base

    def action(a, u):
        b, exps = u
        value = A.multiply_basis(a, b)
        for i in carrier.word(exps):
            value = lie.right_action_generator(value, i)
        return value
    return action


def trivial_module(hopf: LeftHopfAlgebroid, name: str = 'k') -> CoefficientModule:
    """ℚ with actions through ε and coaction 1 ↦ 1 ⊗ 1 (Hopf algebras over ℚ)."""
    if hopf.base.dimension != 1:
        raise PreconditionError("The trivial module needs base ℚ")
    B = hopf
    one = hopf.base.unit()
    base_label = hopf.base_one

    def left(u, n):
        return B.counit(u)

    def right(n, u):
        return B.counit(u)

    def coaction(n):
        return tensor(B.unit(), one)

    return CoefficientModule(name, B, [base_label], left_action=left, right_action=right,
                             coaction=coaction, product=hopf.base.multiply_basis, unit=one)


def adjoint_module(hopf: LeftHopfAlgebroid, name: str = 'ad') -> CoefficientModule:
    """
    H acting on itself by h·n = h₊ n h₋ (= h₍₁₎ n S(h₍₂₎)), coacting by Δ, with the
    algebra product of H.
    """
    if hopf.base.dimension != 1:
        raise PreconditionError("The adjoint module needs a Hopf algebra over ℚ")
    U = hopf.carrier

    def left(h, n):
        acc = Accumulator()
        for (plus, minus), c in hopf.translation(h).terms():
            acc.add_vector(U.product(FreeVector.basis(plus), FreeVector.basis(n),
                                     FreeVector.basis(minus)), c)
        return acc.result()

    return CoefficientModule(name, hopf, U.basis(), left_action=left, coaction=hopf.coproduct,
                             product=U.multiply_basis, unit=U.unit())


def twisted_base_module(bialgebroid: LeftBialgebroid, sigma: Label,
                        name: Optional[str] = None) -> CoefficientModule:
    """A with coaction a ↦ s(a)σ ⊗_A 1 for a grouplike σ (not a comodule algebra unless σ = 1)."""
    base = base_module(bialgebroid, name=name or f"A_{sigma}")
    U = bialgebroid.carrier
    one = bialgebroid.base.unit()

    def coaction(a):
        return tensor(U.multiply(bialgebroid.source(a), FreeVector.basis(sigma)), one)

    return CoefficientModule(base.name, bialgebroid, base.labels,
                             left_action=base._left._fn, coaction=coaction,
                             product=bialgebroid.base.multiply_basis, unit=one)


def left_regular_module(bialgebroid: LeftBialgebroid, name: str = 'U') -> CoefficientModule:
    """U acting on itself by left multiplication (finite carriers)."""
    U = bialgebroid.carrier
    return CoefficientModule(name, bialgebroid, U.basis(), left_action=U.multiply_basis)


def bimodule_action(module: CoefficientModule, a: FreeVector, v: FreeVector,
                    b: FreeVector, side: str = 'left') -> FreeVector:
    """
    a ▷ n ◁ b = s(a)t(b)n for left modules, a ▸ m ◂ b = m s(b)t(a) for right modules.

    Raises:
        PreconditionError: If the requested action is not declared
    """
    B = module.bialgebroid
    eta = B.carrier.multiply(B.s(a), B.t(b)) if side == 'left' else B.carrier.multiply(B.s(b), B.t(a))
    if side == 'left':
        return module.act_left(eta, v)
    if side == 'right':
        return module.act_right(v, eta)
    raise ValueError(f"Unknown side {side!r}")


# -- characters and induced actions ---------------------------------------

def right_character(module: CoefficientModule) -> Callable[[FreeVector], FreeVector]:
    """
    ∂u := 1_A ⊲ u for the right U-action of a base module.

    Raises:
        StructureError: If the action does not restrict to a ⊲ s(b)t(c) = c a b
    """
    B = module.bialgebroid
    A = B.base
    module._require(module.has_right_action, 'right U-action')
    for a in A.basis():
        for b in A.basis():
            ea, eb = FreeVector.basis(a), FreeVector.basis(b)
            if module.act_right(ea, B.source(b)) != A.multiply(ea, eb):
                raise StructureError("Right action on A is not balanced", witness=f"{a!r} ⊲ s({b!r})")
            if module.act_right(ea, B.target(b)) != A.multiply(eb, ea):
                raise StructureError("Right action on A is not balanced", witness=f"{a!r} ⊲ t({b!r})")
    one = A.unit()

    def character(u: FreeVector) -> FreeVector:
        return module.act_right(one, u)
    return character


def induced_right_action(module: CoefficientModule, base: CoefficientModule,
                         name: Optional[str] = None, degree: int = 2) -> CoefficientModule:
    """
    n·u := (u₋n) ◁ ∂u₊ = t(∂u₊)(u₋n), turning a YD module into an aYD module.

    Args:
        module: The YD module N
        base: A with an aYD right action; its right character is ∂

    Returns:
        CoefficientModule: Same space, left action, coaction and product, plus the right action

    Raises:
        PreconditionError: Unless U is a left Hopf algebroid, A is aYD and N is YD (in that order)
    """
    B = module.bialgebroid
    if not isinstance(B, LeftHopfAlgebroid):
        raise PreconditionError("The induced right action needs a left Hopf algebroid")
    if not validate_ayd(base, degree).is_ayd:
        raise PreconditionError(f"{base.name} is not an anti Yetter-Drinfel'd module")
    if not validate_yd(module, degree).is_yd:
        raise PreconditionError(f"{module.name} is not a Yetter-Drinfel'd module")
    character = right_character(base)

    def right(n, u):
        acc = Accumulator()
        for (plus, minus), c in B.translation(u).terms():
            inner = module.act_left(FreeVector.basis(minus), FreeVector.basis(n))
            acc.add_vector(module.act_left(B.t(character(FreeVector.basis(plus))), inner), c)
        return acc.result()

    logger.debug(f"Induced right action on {module.name} from {base.name}")
    return CoefficientModule(name or f"{module.name}_∂", B, module.labels,
                             left_action=module._left._fn,
                             right_action=right,
                             coaction=module._coaction,
                             product=module._product._fn if module._product else None,
                             unit=module._unit)

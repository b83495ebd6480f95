#!/usr/bin/env python3
"""
Noncommutative Calculus

Cap product ι_φ and Lie derivative ℒ_φ of cochains φ ∈ C^•(U, A) acting on the chains
C_•(U, M) of an SaYD module M, together with the operator identities relating them to
b, B, the cup product and the Gerstenhaber bracket.
"""

import logging
from dataclasses import dataclass
from itertools import product as cartesian
from typing import Callable, Dict, List, Optional, Tuple

from coefficients import CoefficientModule
from complexes import ChainComplex, tuple_products
from exceptions import PreconditionError
from linalg import Accumulator, FreeVector
from operad import HomOperad, desuspend, sign
from reports import CheckResult, run_check

logger = logging.getLogger(__name__)


def theta(n: int, p: int, i: int) -> int:
    """θ^{n,p}_i = |p|(n − |i|), the sign exponent of the untwisted part."""
    return desuspend(p) * (n - desuspend(i))


def xi(n: int, p: int, i: int) -> int:
    """ξ^{n,p}_i = n|i| + |p|, the sign exponent of the twisted part."""
    return n * desuspend(i) + desuspend(p)


@dataclass(frozen=True)
class ChainOperator:
    """A homogeneous linear operator on C_•(U, M) shifting degrees by ``degree``."""

    name: str
    degree: int
    apply: Callable[[int, FreeVector], FreeVector]

    def __call__(self, n: int, c: FreeVector) -> FreeVector:
        if n < 0 or n + self.degree < 0 or c.is_zero():
            return FreeVector.zero()
        return self.apply(n, c)

    def scale(self, coeff: int) -> 'ChainOperator':
        return ChainOperator(f"{coeff}·{self.name}", self.degree,
                             lambda n, c: self.apply(n, c).scale(coeff))


def graded_commutator(x: ChainOperator, y: ChainOperator) -> ChainOperator:
    """[X, Y] = XY − (−1)^{|X||Y|} YX"""
    twist = sign(x.degree * y.degree)

    def apply(n, c):
        return x(n + y.degree, y(n, c)) - y(n + x.degree, x(n, c)).scale(twist)
    return ChainOperator(f"[{x.name}, {y.name}]", x.degree + y.degree, apply)


def _coefficient(combo) -> object:
    c = 1
    for _, d in combo:
        c *= d
    return c


class Calculus:
    """
    The calculus (ℒ, ι, B) of C^•(U, A) on C_•(U, M).

    ``operad`` supplies the cochains (the Hom operad on the base algebra A), the cup
    product and the bracket; M must be a right U-module left U-comodule.
    """

    def __init__(self, module: CoefficientModule, operad: HomOperad):
        B = operad.bialgebroid
        if not hasattr(B, 'translation'):
            raise PreconditionError("The Lie derivative needs a left Hopf algebroid")
        if not (module.has_right_action and module.has_coaction):
            raise PreconditionError(f"{module.name} needs a right U-action and a left U-coaction")
        if set(operad.module.basis()) != set(B.base.basis()):
            raise PreconditionError("Cochains for the calculus must take values in the base algebra")
        self.bialgebroid = B
        self.carrier = B.carrier
        self.module = module
        self.operad = operad
        self.cochains = operad.complex
        self.chains = ChainComplex(B, module, normalized=False)
        self.normalized = ChainComplex(B, module, normalized=True)

    # -- the three operators ------------------------------------------------

    def _value(self, p: int, phi: FreeVector, factors: List[FreeVector],
               table: Dict) -> FreeVector:
        return self.cochains.evaluate_tuple(p, phi, factors, table)

    def cap(self, p: int, phi: FreeVector, n: int, c: FreeVector) -> FreeVector:
        """
        ι_φ(m, u¹, …, uⁿ) = (m, u¹, …, u^{n−p−1}, u^{n−p} t(φ(u^{n−p+1}, …, uⁿ)));
        for p = n this is φ(u) ▸ m and for p > n it vanishes.
        """
        if p > n:
            return FreeVector.zero()
        U = self.carrier
        M = self.module
        e = FreeVector.basis
        table = self.cochains.table(phi)
        acc = Accumulator()
        for label, coeff in c.terms():
            value = self._value(p, phi, [e(x) for x in label[n - p + 1:]], table)
            if value.is_zero():
                continue
            if p == n:
                acc.add_vector(M.lift(e(label[0]), M.blact, value).map_labels(lambda m: (m,)), coeff)
                continue
            head = label[:n - p]
            entry = U.multiply(e(label[n - p]), self.bialgebroid.t(value))
            acc.add_vector(entry.map_labels(lambda x: head + (x,)), coeff)
        return self.chains.nf(n - p, acc.result())

    def derivation(self, p: int, phi: FreeVector, factors: Tuple, table: Dict) -> FreeVector:
        """D_φ(u¹, …, u^p) = s(φ(u¹₍₁₎, …, u^p₍₁₎)) u¹₍₂₎⋯u^p₍₂₎; D_a = s(a) in arity 0."""
        B = self.bialgebroid
        U = self.carrier
        e = FreeVector.basis
        acc = Accumulator()
        for combo in cartesian(*[list(B.coproduct(x).terms()) for x in factors]):
            value = self._value(p, phi, [e(x) for (x, _), _ in combo], table)
            if value.is_zero():
                continue
            seconds = U.product(*[e(y) for (_, y), _ in combo])
            acc.add_vector(U.multiply(B.s(value), seconds), _coefficient(combo))
        return acc.result()

    def _untwisted(self, p: int, phi: FreeVector, n: int, c: FreeVector, table: Dict) -> FreeVector:
        k = desuspend(p)
        e = FreeVector.basis
        acc = Accumulator()
        for label, coeff in c.terms():
            m, us = label[0], label[1:]
            for i in range(1, n - k + 1):
                inner = self.derivation(p, phi, us[i - 1:i - 1 + p], table)
                if inner.is_zero():
                    continue
                head = (m,) + us[:i - 1]
                tail = us[i - 1 + p:]
                acc.add_vector(inner.map_labels(lambda x: head + (x,) + tail),
                               coeff * sign(theta(n, p, i)))
        return acc.result()

    def _twisted(self, p: int, phi: FreeVector, n: int, c: FreeVector, table: Dict) -> FreeVector:
        """
        Σ_{i=0}^{|p|} (−1)^{ξ_{i+1}} (m₍₀₎u¹₊₍₂₎⋯uⁱ₊₍₂₎, u^{i+1}₊, …, u^{n−p+i}₊,
        φ(u^{n−p+i+2}₊, …, uⁿ₊, uⁿ₋⋯u¹₋m₍₋₁₎, u¹₊₍₁₎, …, uⁱ₊₍₁₎) ▸ u^{n−p+i+1}₊)
        """
        B = self.bialgebroid
        U = self.carrier
        M = self.module
        e = FreeVector.basis
        k = desuspend(p)
        acc = Accumulator()
        for label, coeff in c.terms():
            m, us = label[0], label[1:]
            for combo in cartesian(*[list(B.translation(u).terms()) for u in us]):
                ct = coeff * _coefficient(combo)
                pluses = [x for (x, _), _ in combo]
                minus_product = U.product(*[e(y) for (_, y), _ in reversed(combo)])
                for (v, m0), cm in M.coaction(m).terms():
                    twisted_arg = U.multiply(minus_product, e(v))
                    for i in range(k + 1):
                        last = n - p + i + 1
                        for split in cartesian(*[list(B.coproduct(x).terms()) for x in pluses[:i]]):
                            args = [e(x) for x in pluses[last:]] + [twisted_arg] \
                                + [e(x) for (x, _), _ in split]
                            value = self._value(p, phi, args, table)
                            if value.is_zero():
                                continue
                            head = M.act_right(e(m0), U.product(*[e(y) for (_, y), _ in split]))
                            middle = [e(x) for x in pluses[i:last - 1]]
                            entry = U.multiply(e(pluses[last - 1]), B.t(value))
                            acc.add_vector(tuple_products([head] + middle + [entry]),
                                           ct * cm * _coefficient(split) * sign(xi(n, p, i + 1)))
        return acc.result()

    def lie_derivative(self, p: int, phi: FreeVector, n: int, c: FreeVector) -> FreeVector:
        """
        ℒ_φ : C_n → C_{n−|p|}, the untwisted plus the twisted part for p ≤ n,
        (−1)^{|p|} ι_φ s₋₁𝒩 for p = n + 1 and zero above.
        """
        if p > n + 1:
            return FreeVector.zero()
        if p == n + 1:
            lifted = self.chains.extra_degeneracy(n, self.chains.norm_N(n, c))
            return self.cap(p, phi, n + 1, lifted).scale(sign(desuspend(p)))
        table = self.cochains.table(phi)
        value = self._untwisted(p, phi, n, c, table) + self._twisted(p, phi, n, c, table)
        return self.chains.nf(n - desuspend(p), value)

    def lie_derivative_commutative(self, p: int, phi: FreeVector, n: int, c: FreeVector) -> FreeVector:
        """
        ℒ_φ for commutative U and M = A, where the twisted part loses the coaction and
        the coproducts: (u^{i+1}₊, …, u^{n−p+i}₊, φ(…, uⁿ₋⋯u¹₋, u¹₊, …, uⁱ₊) ▸ u^{n−p+i+1}₊).

        Chains (a, u¹, …) are first rewritten as (1, t(a)u¹, …).

        Raises:
            PreconditionError: Unless U is commutative and M is the base algebra
        """
        B = self.bialgebroid
        if not self.carrier.commutative:
            raise PreconditionError(f"{self.carrier.name} is not commutative")
        if set(self.module.basis()) != set(B.base.basis()):
            raise PreconditionError("The commutative formula needs M = A")
        if p > n or n == 0:
            return self.lie_derivative(p, phi, n, c)
        U = self.carrier
        e = FreeVector.basis
        one = B.base_one
        table = self.cochains.table(phi)
        k = desuspend(p)

        spread = Accumulator()
        for label, coeff in c.terms():
            first = U.multiply(B.t(e(label[0])), e(label[1]))
            spread.add_vector(first.map_labels(lambda x: (one, x) + label[2:]), coeff)
        c = spread.result()

        acc = Accumulator()
        for label, coeff in c.terms():
            us = label[1:]
            for combo in cartesian(*[list(B.translation(u).terms()) for u in us]):
                ct = coeff * _coefficient(combo)
                pluses = [x for (x, _), _ in combo]
                minus_product = U.product(*[e(y) for (_, y), _ in reversed(combo)])
                for i in range(k + 1):
                    last = n - p + i + 1
                    args = [e(x) for x in pluses[last:]] + [minus_product] + [e(x) for x in pluses[:i]]
                    value = self._value(p, phi, args, table)
                    if value.is_zero():
                        continue
                    middle = [e(one)] + [e(x) for x in pluses[i:last - 1]]
                    entry = U.multiply(e(pluses[last - 1]), B.t(value))
                    acc.add_vector(tuple_products(middle + [entry]), ct * sign(xi(n, p, i + 1)))
        value = self._untwisted(p, phi, n, c, table) + acc.result()
        return self.chains.nf(n - k, value)

    # -- operators ----------------------------------------------------------

    def iota(self, p: int, phi: FreeVector) -> ChainOperator:
        return ChainOperator(f"ι[{p}]", -p, lambda n, c: self.cap(p, phi, n, c))

    def lie(self, p: int, phi: FreeVector) -> ChainOperator:
        return ChainOperator(f"ℒ[{p}]", -desuspend(p), lambda n, c: self.lie_derivative(p, phi, n, c))

    def b(self, normalized: bool = False) -> ChainOperator:
        chains = self.normalized if normalized else self.chains
        return ChainOperator('b', -1, chains.differential)

    def connes_B(self) -> ChainOperator:
        """B = s₋₁𝒩 on the normalized chains."""
        return ChainOperator('B', 1, self.normalized.B)

    def normalized_lie(self, p: int, phi: FreeVector) -> ChainOperator:
        """ℒ_φ read in the normalized complex."""
        def apply(n, c):
            return self.normalized.normalize(n - desuspend(p), self.lie_derivative(p, phi, n, c))
        return ChainOperator(f"ℒ̄[{p}]", -desuspend(p), apply)

    def cartan_defect(self, p: int, phi: FreeVector) -> ChainOperator:
        """ℒ_φ − [B, ι_φ] on normalized chains; maps cycles to boundaries for cocycles φ."""
        normalized_iota = ChainOperator(
            f"ῑ[{p}]", -p,
            lambda n, c: self.normalized.normalize(n - p, self.cap(p, phi, n, c)))
        homotopy = graded_commutator(self.connes_B(), normalized_iota)

        def apply(n, c):
            return self.normalized_lie(p, phi)(n, c) - homotopy(n, c)
        return ChainOperator(f"ℒ[{p}] − [B, ι[{p}]]", -desuspend(p), apply)

    # -- identity checks ----------------------------------------------------

    def _cochains(self, max_arity: int) -> List[Tuple[int, FreeVector]]:
        return [(p, phi) for p in range(max_arity + 1) for phi in self.operad.elements(p)]

    def _normalized_cochains(self, max_arity: int) -> List[Tuple[int, FreeVector]]:
        unit = self.carrier.unit_label()
        return [(p, phi) for p, phi in self._cochains(max_arity)
                if all(unit not in w for (w, _), _ in phi.terms())]

    def _chain_basis(self, max_degree: int, normalized: bool = False) -> List[Tuple[int, FreeVector]]:
        chains = self.normalized if normalized else self.chains
        return [(n, v) for n in range(max_degree + 1) for v in chains.basis(n).vectors]

    @staticmethod
    def _operator_witness(pairs, chains, lhs: Callable, rhs: Callable) -> Optional[str]:
        for (p, phi), (n, c) in cartesian(pairs, chains):
            left = lhs(p, phi)(n, c)
            right = rhs(p, phi)(n, c)
            if left != right:
                return f"arity {p}, φ = {phi!r}, degree {n}, c = {c!r}: {left!r} ≠ {right!r}"
        return None

    def checks(self, max_arity: int = 2, max_degree: int = 3,
               shortcut: bool = True) -> List[CheckResult]:
        """The cochain-level operator identities of the calculus on basis chains and cochains."""
        operad = self.operad
        cochains = self._cochains(max_arity)
        chains = self._chain_basis(max_degree)
        b = self.b()

        def cap_cup():
            for (p, phi), (q, psi), (n, c) in cartesian(cochains, cochains, chains):
                left = self.cap(p, phi, n - q, self.cap(q, psi, n, c)) if n >= q else FreeVector.zero()
                right = self.cap(p + q, operad.cup(p, phi, q, psi), n, c)
                if left != right:
                    return f"arities {p},{q}: φ={phi!r} ψ={psi!r} on {c!r}"
            return None

        def b_cap():
            return self._operator_witness(
                cochains, chains,
                lambda p, phi: graded_commutator(b, self.iota(p, phi)),
                lambda p, phi: self.iota(p + 1, operad.delta(p, phi)))

        def lie_bracket():
            for (p, phi), (q, psi), (n, c) in cartesian(cochains, cochains, chains):
                left = graded_commutator(self.lie(p, phi), self.lie(q, psi))(n, c)
                right = self.lie(p + q - 1, operad.bracket(p, phi, q, psi))(n, c)
                if left != right:
                    return f"arities {p},{q}: φ={phi!r} ψ={psi!r} on {c!r}"
            return None

        def b_lie():
            return self._operator_witness(
                cochains, chains,
                lambda p, phi: graded_commutator(b, self.lie(p, phi)),
                lambda p, phi: self.lie(p + 1, operad.delta(p, phi)).scale(-1))

        def lie_mu():
            for n, c in chains:
                if self.lie_derivative(2, operad.mu, n, c) != -self.chains.b(n, c):
                    return f"degree {n}: {c!r}"
            return None

        def lie_connes():
            normalized_chains = self._chain_basis(max_degree - 1, normalized=True)
            return self._operator_witness(
                self._normalized_cochains(max_arity), normalized_chains,
                lambda p, phi: graded_commutator(self.normalized_lie(p, phi), self.connes_B()),
                lambda p, phi: ChainOperator('0', 2 - p, lambda n, c: FreeVector.zero()))

        results = [
            run_check('calculus.cap_cup', 'ι_φ ι_ψ = ι_{φ⌣ψ}', cap_cup),
            run_check('calculus.b_cap', '[b, ι_φ] = ι_{δφ}', b_cap),
            run_check('calculus.lie_bracket', '[ℒ_φ, ℒ_ψ] = ℒ_{{φ,ψ}}', lie_bracket),
            run_check('calculus.b_lie', '[b, ℒ_φ] + ℒ_{δφ} = 0', b_lie),
            run_check('calculus.lie_mu', 'ℒ_μ = −b', lie_mu),
            run_check('calculus.lie_connes', '[ℒ_φ, B] = 0 on normalized chains', lie_connes),
        ]
        if shortcut:
            results.append(run_check('calculus.commutative_shortcut',
                                     'commutative formula = general formula',
                                     lambda: self._operator_witness(
                                         cochains, chains, self.lie,
                                         lambda p, phi: ChainOperator(
                                             'ℒᶜ', -desuspend(p),
                                             lambda n, c: self.lie_derivative_commutative(p, phi, n, c)))))
        failed = [r.id for r in results if r.failed]
        if failed:
            logger.warning(f"❌ Calculus identities failing: {', '.join(failed)}")
        else:
            logger.info(f"✅ Calculus identities hold up to arity {max_arity}, degree {max_degree}")
        return results

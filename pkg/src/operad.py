#!/usr/bin/env python3
"""
Operads With Multiplication

The generic non-Σ operad layer (partial compositions, Gerstenhaber bracket, cup product,
operadic differential) and its two instances: the Hom operad on C^•(U, N) and the cyclic
Cotor operad on C^•_co(U, N).
"""

import logging
from itertools import product as cartesian
from typing import Callable, List, Optional, Sequence, Tuple

from coefficients import CoefficientModule, module_checks
from complexes import CotorComplex, HomComplex, arity_zero, tuple_products
from exceptions import PreconditionError, StructureError
from linalg import Accumulator, FreeVector
from reports import CheckResult, first_failure, run_check

logger = logging.getLogger(__name__)

Element = Tuple[int, FreeVector]


def desuspend(n: int) -> int:
    """|n| := n − 1, the degree shift behind every operadic sign."""
    return n - 1


def sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


class Operad:
    """
    An operad with multiplication (μ, 𝟙, e) whose elements are FreeVectors of a known arity.

    Subclasses implement ``_comp`` for 1 ≤ i ≤ p; the zero rule for p < i or p = 0 lives here.
    """

    kind = ''

    def __init__(self, complex_, strict: bool = True):
        self.complex = complex_
        self.bialgebroid = complex_.bialgebroid
        self.module: CoefficientModule = complex_.module
        self.mu = self._mu()
        self.one = self._one()
        self.e = self._e()
        self.construction_checks = self.multiplication_checks()
        failures = [check for check in self.construction_checks if check.failed]
        if failures and strict:
            raise StructureError(f"{self.kind} operad multiplication fails: {failures[0].id}",
                                 witness=failures[0].witness)
        for failure in failures:
            logger.warning(f"❌ {failure.id}: {failure.witness}")

    def _mu(self) -> FreeVector:
        raise NotImplementedError

    def _one(self) -> FreeVector:
        raise NotImplementedError

    def _e(self) -> FreeVector:
        raise NotImplementedError

    def _comp(self, p: int, phi: FreeVector, i: int, q: int, psi: FreeVector) -> FreeVector:
        raise NotImplementedError

    def elements(self, p: int) -> List[FreeVector]:
        """Basis elements of O(p)."""
        return list(self.complex.basis(p).vectors)

    def comp(self, p: int, phi: FreeVector, i: int, q: int, psi: FreeVector) -> FreeVector:
        """
        φ ∘_i ψ ∈ O(p + q − 1).

        Raises:
            ValueError: For i < 1
        """
        if i < 1:
            raise ValueError(f"Partial composition index {i} must be positive")
        if p == 0 or i > p:
            return FreeVector.zero()
        return self._comp(p, phi, i, q, psi)

    def bar_comp(self, p: int, phi: FreeVector, q: int, psi: FreeVector) -> FreeVector:
        """φ ∘̄ ψ = (−1)^{|p||q|} Σ_i (−1)^{|q||i|} φ ∘_i ψ"""
        acc = Accumulator()
        outer = desuspend(p) * desuspend(q)
        for i in range(1, p + 1):
            acc.add_vector(self.comp(p, phi, i, q, psi), sign(outer + desuspend(q) * desuspend(i)))
        return acc.result()

    def bracket(self, p: int, phi: FreeVector, q: int, psi: FreeVector) -> FreeVector:
        """{φ, ψ} = φ ∘̄ ψ − (−1)^{|p||q|} ψ ∘̄ φ"""
        return self.bar_comp(p, phi, q, psi) - self.bar_comp(q, psi, p, phi).scale(
            sign(desuspend(p) * desuspend(q)))

    def cup(self, p: int, phi: FreeVector, q: int, psi: FreeVector) -> FreeVector:
        """φ ⌣ ψ = (μ ∘₁ φ) ∘_{p+1} ψ"""
        return self.comp(p + 1, self.comp(2, self.mu, 1, p, phi), p + 1, q, psi)

    def cup_alternative(self, p: int, phi: FreeVector, q: int, psi: FreeVector) -> FreeVector:
        """(μ ∘₂ ψ) ∘₁ φ"""
        return self.comp(q + 1, self.comp(2, self.mu, 2, q, psi), 1, p, phi)

    def delta(self, p: int, phi: FreeVector) -> FreeVector:
        """δφ = {μ, φ}"""
        return self.bracket(2, self.mu, p, phi)

    # -- identity checks --------------------------------------------------

    def multiplication_checks(self) -> List[CheckResult]:
        mu, one, e = self.mu, self.one, self.e

        def associative():
            if self.comp(2, mu, 1, 2, mu) != self.comp(2, mu, 2, 2, mu):
                return 'μ ∘₁ μ − μ ∘₂ μ = ' + repr(self.comp(2, mu, 1, 2, mu) - self.comp(2, mu, 2, 2, mu))
            return None

        def unital():
            for i in (1, 2):
                if self.comp(2, mu, i, 0, e) != one:
                    return f"μ ∘_{i} e = {self.comp(2, mu, i, 0, e)!r}"
            return None

        return [
            run_check(f'{self.kind}.mu_associative', 'μ ∘₁ μ = μ ∘₂ μ', associative),
            run_check(f'{self.kind}.mu_unit', 'μ ∘₁ e = μ ∘₂ e = 𝟙', unital),
        ]

    def relation_checks(self, max_arity: int = 2,
                        arities: Optional[Sequence[int]] = None) -> List[CheckResult]:
        """Unit laws and the three composition relations on basis elements."""
        arities = list(arities) if arities is not None else list(range(max_arity + 1))
        elements = {p: self.elements(p) for p in arities}

        def unit_laws():
            for p in arities:
                for phi in elements[p]:
                    if p >= 1 and self.comp(1, self.one, 1, p, phi) != phi:
                        return f"𝟙 ∘₁ φ ≠ φ for φ = {phi!r}"
                    for i in range(1, p + 1):
                        if self.comp(p, phi, i, 1, self.one) != phi:
                            return f"φ ∘_{i} 𝟙 ≠ φ for φ = {phi!r}"
            return None

        def composition(case: str):
            def body():
                for p, q, r in cartesian(arities, repeat=3):
                    for phi, psi, chi in cartesian(elements[p], elements[q], elements[r]):
                        for i in range(1, p + 1):
                            inner = self.comp(p, phi, i, q, psi)
                            for j in range(1, p + q):
                                if case == 'before' and j < i:
                                    rhs = self.comp(p + r - 1, self.comp(p, phi, j, r, chi), i + r - 1, q, psi)
                                elif case == 'nested' and i <= j < q + i:
                                    rhs = self.comp(p, phi, i, q + r - 1, self.comp(q, psi, j - i + 1, r, chi))
                                elif case == 'after' and j >= q + i:
                                    rhs = self.comp(p + r - 1, self.comp(p, phi, j - q + 1, r, chi), i, q, psi)
                                else:
                                    continue
                                lhs = self.comp(p + q - 1, inner, j, r, chi)
                                if lhs != rhs:
                                    return f"p,q,r={p},{q},{r} i={i} j={j}: φ={phi!r} ψ={psi!r} χ={chi!r}"
                return None
            return body

        return [
            run_check(f'{self.kind}.unit_laws', 'φ ∘_i 𝟙 = 𝟙 ∘_i φ = φ', unit_laws),
            run_check(f'{self.kind}.composition_before', '(φ ∘_i ψ) ∘_j χ = (φ ∘_j χ) ∘_{i+r−1} ψ, j < i',
                      composition('before')),
            run_check(f'{self.kind}.composition_nested', '(φ ∘_i ψ) ∘_j χ = φ ∘_i (ψ ∘_{j−i+1} χ), i ≤ j < q+i',
                      composition('nested')),
            run_check(f'{self.kind}.composition_after', '(φ ∘_i ψ) ∘_j χ = (φ ∘_{j−q+1} χ) ∘_i ψ, j ≥ q+i',
                      composition('after')),
        ]

    def structure_checks(self, max_arity: int = 2) -> List[CheckResult]:
        """Cup consistency, bracket antisymmetry and δ = {μ, ·} on basis elements."""
        arities = list(range(max_arity + 1))
        pairs = [(p, phi, q, psi) for p in arities for q in arities
                 for phi in self.elements(p) for psi in self.elements(q)]

        def describe(item):
            return f"arities {item[0]},{item[2]}: {item[1]!r}, {item[3]!r}"

        return [
            run_check(f'{self.kind}.cup_consistent', '(μ ∘₁ φ) ∘_{p+1} ψ = (μ ∘₂ ψ) ∘₁ φ',
                      lambda: first_failure(pairs, lambda t: self.cup(*t) == self.cup_alternative(*t)
                                            == self.explicit_cup(*t), describe)),
            run_check(f'{self.kind}.bracket_antisymmetric', '{φ,ψ} + (−1)^{|p||q|}{ψ,φ} = 0',
                      lambda: first_failure(pairs, lambda t: (
                          self.bracket(*t) + self.bracket(t[2], t[3], t[0], t[1]).scale(
                              sign(desuspend(t[0]) * desuspend(t[2])))).is_zero(), describe)),
            run_check(f'{self.kind}.delta_is_bracket', 'δφ = {μ, φ}',
                      lambda: first_failure(
                          [(p, phi) for p in arities for phi in self.elements(p)],
                          lambda t: self.delta(*t) == self.complex.differential(*t))),
        ]

    def explicit_cup(self, p: int, phi: FreeVector, q: int, psi: FreeVector) -> FreeVector:
        raise NotImplementedError


class HomOperad(Operad):
    """
    C^•(U, N) for a braided commutative YD algebra N, with
    μ(u, v) = s(ε(uv)) ▷ 1_N, 𝟙(u) = s(ε(u)) ▷ 1_N and e = 1_N.
    """

    kind = 'hom'

    def __init__(self, bialgebroid, module: CoefficientModule, strict: bool = True,
                 require_flags: bool = True, degree: int = 2):
        if require_flags:
            flags, _ = module_checks(module, degree)
            if not flags.braided_commutative_yd_algebra:
                raise PreconditionError(
                    f"{module.name} is not a braided commutative Yetter-Drinfel'd algebra")
        super().__init__(HomComplex(bialgebroid, module, normalized=False), strict)

    def _counit_values(self, product: Callable[[Tuple], FreeVector]) -> Callable[[Tuple], FreeVector]:
        N = self.module
        B = self.bialgebroid

        def value(w):
            return N.lift(N.unit(), N.lact, B.epsilon(product(w)))
        return value

    def _mu(self) -> FreeVector:
        U = self.bialgebroid.carrier
        return self.complex.from_function(2, self._counit_values(lambda w: U.multiply_basis(*w)))

    def _one(self) -> FreeVector:
        return self.complex.from_function(1, self._counit_values(lambda w: FreeVector.basis(w[0])))

    def _e(self) -> FreeVector:
        return arity_zero(self.module.unit())

    def _comp(self, p, phi, i, q, psi):
        """
        (φ ∘_i ψ)(u¹, …) = φ(u¹₍₁₎, …, u^{i−1}₍₁₎, D_ψ(…)₍₋₁₎, u^{i+q}, …)
        ·_N (u¹₍₂₎⋯u^{i−1}₍₂₎ D_ψ(…)₍₀₎)
        """
        hc = self.complex
        B = self.bialgebroid
        U = B.carrier
        N = self.module
        e = FreeVector.basis
        phi_table = hc.table(phi)
        psi_table = hc.table(psi)

        def value(w):
            pre, mid, post = w[:i - 1], w[i - 1:i - 1 + q], w[i - 1 + q:]
            pre_splits = [list(B.coproduct(x).terms()) for x in pre]
            mid_splits = [list(B.coproduct(x).terms()) for x in mid]
            acc = Accumulator()
            for pc in cartesian(*pre_splits):
                c1 = _coefficient(pc)
                lefts = [e(x) for (x, _), _ in pc]
                y_product = U.product(*[e(y) for (_, y), _ in pc])
                for mc in cartesian(*mid_splits):
                    c2 = _coefficient(mc)
                    inner = hc.evaluate_tuple(q, psi, [e(a) for (a, _), _ in mc], psi_table)
                    b_product = U.product(*[e(b) for (_, b), _ in mc])
                    for (v, k), c3 in N.coact(inner).terms():
                        d_u = U.multiply(e(v), b_product)
                        outer = hc.evaluate_tuple(p, phi, lefts + [d_u] + [e(x) for x in post], phi_table)
                        if outer.is_zero():
                            continue
                        acc.add_vector(N.multiply(outer, N.act_left(y_product, e(k))), c1 * c2 * c3)
            return acc.result()

        return hc.from_function(p + q - 1, value)

    def explicit_cup(self, p, phi, q, psi):
        """(φ ⌣ ψ)(u) = φ(u¹₍₁₎, …, u^p₍₁₎) ·_N (u¹₍₂₎⋯u^p₍₂₎ ψ(u^{p+1}, …))"""
        hc = self.complex
        B = self.bialgebroid
        U = B.carrier
        N = self.module
        e = FreeVector.basis
        phi_table = hc.table(phi)
        psi_table = hc.table(psi)

        def value(w):
            acc = Accumulator()
            right = hc.evaluate_tuple(q, psi, [e(x) for x in w[p:]], psi_table)
            for pc in cartesian(*[list(B.coproduct(x).terms()) for x in w[:p]]):
                left = hc.evaluate_tuple(p, phi, [e(x) for (x, _), _ in pc], phi_table)
                y_product = U.product(*[e(y) for (_, y), _ in pc])
                acc.add_vector(N.multiply(left, N.act_left(y_product, right)), _coefficient(pc))
            return acc.result()

        return hc.from_function(p + q, value)


class CotorOperad(Operad):
    """
    C^•_co(U, N) for a braided commutative YD algebra N, with μ = (1, 1, 1_N),
    𝟙 = (1, 1_N), e = 1_N and, for a right U-action on N, the cyclic operator τ.
    """

    kind = 'cotor'

    def __init__(self, bialgebroid, module: CoefficientModule, strict: bool = True):
        if not (module.has_left_action and module.has_coaction and module.has_product):
            raise PreconditionError(f"{module.name} needs a left action, a coaction and a product")
        super().__init__(CotorComplex(bialgebroid, module, normalized=False), strict)

    def _mu(self) -> FreeVector:
        one = self.bialgebroid.carrier.unit()
        return tuple_products([one, one, self.module.unit()])

    def _one(self) -> FreeVector:
        return tuple_products([self.bialgebroid.carrier.unit(), self.module.unit()])

    def _e(self) -> FreeVector:
        return self.module.unit().map_labels(lambda n: (n,))

    def _comp(self, p, phi, i, q, psi):
        """
        (u, n) ∘_i (v, n′) = (u¹, …, u^{i−1}, uⁱ₍₁₎v¹, …, uⁱ₍q₎v^q,
        z₍₋(p−i)₎u^{i+1}, …, z₍₋₁₎u^p, z₍₀₎ ·_N n) with z = uⁱ₍q+1₎n′.
        """
        B = self.bialgebroid
        U = B.carrier
        N = self.module
        e = FreeVector.basis
        acc = Accumulator()
        for left, c in phi.terms():
            u, n = left[:p], left[p]
            for right, d in psi.terms():
                v, n_prime = right[:q], right[q]
                for legs, f in B.iterated_coproduct(e(u[i - 1]), q + 1).terms():
                    firsts = [U.multiply_basis(legs[j], v[j]) for j in range(q)]
                    z = N.act_left(e(legs[q]), e(n_prime))
                    for coacted, g in N.iterated_coaction(z, p - i).terms():
                        middles = [U.multiply_basis(coacted[j], u[i + j]) for j in range(p - i)]
                        last = N.multiply(e(coacted[-1]), e(n))
                        factors = [e(x) for x in u[:i - 1]] + firsts + middles + [last]
                        acc.add_vector(tuple_products(factors), c * d * f * g)
        return self.complex.nf(p + q - 1, acc.result())

    def explicit_cup(self, p, phi, q, psi):
        """(u, m) ⌣ (v, n) = (u, m₍₋q₎v¹, …, m₍₋₁₎v^q, m₍₀₎ ·_N n)"""
        U = self.bialgebroid.carrier
        N = self.module
        e = FreeVector.basis
        acc = Accumulator()
        for left, c in phi.terms():
            u, m = left[:p], left[p]
            for right, d in psi.terms():
                v, n = right[:q], right[q]
                for coacted, f in N.iterated_coaction(e(m), q).terms():
                    middles = [U.multiply_basis(coacted[j], v[j]) for j in range(q)]
                    last = N.multiply(e(coacted[-1]), e(n))
                    acc.add_vector(tuple_products([e(x) for x in u] + middles + [last]), c * d * f)
        return self.complex.nf(p + q, acc.result())

    # -- cyclic structure -------------------------------------------------

    def tau(self, p: int, z: FreeVector) -> FreeVector:
        return self.complex.cyclic_tau(p, z)

    def cyclic_checks(self, max_arity: int = 2, max_order: int = 3) -> List[CheckResult]:
        """τ^{n+1} = id, τ₁𝟙 = 𝟙, τ₂μ = μ and the two composition relations of a cyclic operad."""
        arities = list(range(max_arity + 1))
        elements = {p: self.elements(p) for p in range(max(max_arity, max_order) + 1)}

        def order():
            for n in range(max_order + 1):
                for z in elements[n]:
                    if self.complex.tau_power(n + 1, n, z) != z:
                        return f"τ^{n + 1} ≠ id on {z!r}"
            return None

        def first_relation():
            for p, q in cartesian([a for a in arities if a >= 1], repeat=2):
                for phi, psi in cartesian(elements[p], elements[q]):
                    lhs = self.tau(p + q - 1, self.comp(p, phi, 1, q, psi))
                    rhs = self.comp(q, self.tau(q, psi), q, p, self.tau(p, phi))
                    if lhs != rhs:
                        return f"p,q={p},{q}: φ={phi!r} ψ={psi!r}"
            return None

        def shift_relation():
            for p, q in cartesian(arities, repeat=2):
                for phi, psi in cartesian(elements[p], elements[q]):
                    for i in range(2, p + 1):
                        lhs = self.tau(p + q - 1, self.comp(p, phi, i, q, psi))
                        rhs = self.comp(p, self.tau(p, phi), i - 1, q, psi)
                        if lhs != rhs:
                            return f"p,q={p},{q} i={i}: φ={phi!r} ψ={psi!r}"
            return None

        return [
            run_check('cotor.tau_order', 'τ_n^{n+1} = id', order),
            run_check('cotor.tau_unit', 'τ₁𝟙 = 𝟙',
                      lambda: None if self.tau(1, self.one) == self.one else repr(self.tau(1, self.one))),
            run_check('cotor.tau_mu', 'τ₂μ = μ',
                      lambda: None if self.tau(2, self.mu) == self.mu else repr(self.tau(2, self.mu))),
            run_check('cotor.tau_first_composition', 'τ(φ ∘₁ ψ) = τψ ∘_q τφ', first_relation),
            run_check('cotor.tau_shift_composition', 'τ(φ ∘_i ψ) = τφ ∘_{i−1} ψ, 2 ≤ i ≤ p',
                      shift_relation),
        ]


def _coefficient(combo) -> object:
    c = 1
    for _, d in combo:
        c *= d
    return c

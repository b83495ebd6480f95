#!/usr/bin/env python3
"""
Simplicial Complexes

The para-cyclic chain module C_•(U, M) = M ⊗_Aop U ⊗_Aop ⋯, the para-cocyclic Cotor
module C^•_co(U, N) = U ⊗_A ⋯ ⊗_A N and the Hom cochain complex C^•(U, N), with faces,
degeneracies, (co)cyclic operators, the differentials b, β, δ and Connes' B.
"""

import logging
import random
import threading
from itertools import product as cartesian
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from coefficients import CoefficientModule
from exceptions import PreconditionError
from linalg import Accumulator, FreeVector, Label, SubspaceSolver
from reports import CheckResult, run_check
from tensor_space import BOND_A, BOND_AOP, base_head

logger = logging.getLogger(__name__)

CHAIN = 'chain'
HOM = 'hom'
COTOR = 'cotor'


class DegreeBasis:
    """
    The basis of one degree of a complex, with coordinates of vectors in it.

    A label basis consists of basis vectors e_label; an echelon basis consists of
    reduced rows whose pivots read off coordinates.
    """

    def __init__(self, vectors: Sequence[FreeVector], pivots: Optional[Sequence[Label]] = None):
        self.vectors = list(vectors)
        self.pivots = list(pivots) if pivots is not None else None
        if self.pivots is None:
            self._index = {}
            for i, vector in enumerate(self.vectors):
                (label, _), = vector.terms()
                self._index[label] = i

    @classmethod
    def from_labels(cls, labels: Iterable[Label]) -> 'DegreeBasis':
        return cls([FreeVector.basis(label) for label in labels])

    def __len__(self) -> int:
        return len(self.vectors)

    def coordinates(self, vector: FreeVector) -> Dict[int, object]:
        """
        Raises:
            ValueError: If the vector has support outside this basis
        """
        if self.pivots is not None:
            coords = {}
            for i, pivot in enumerate(self.pivots):
                c = vector.coeff(pivot)
                if c:
                    coords[i] = c
            return coords
        coords = {}
        for label, c in vector.terms():
            index = self._index.get(label)
            if index is None:
                raise ValueError(f"{label!r} is not a basis label of this degree")
            coords[index] = c
        return coords

    def vector(self, coords: Dict[int, object]) -> FreeVector:
        acc = Accumulator()
        for i, c in coords.items():
            acc.add_vector(self.vectors[i], c)
        return acc.result()


def tuple_products(factors: Sequence[FreeVector]) -> FreeVector:
    """Expand a sequence of vectors into a vector over label tuples."""
    current = FreeVector.basis(())
    for factor in factors:
        acc = Accumulator()
        for labels, c in current.terms():
            for label, d in factor.terms():
                acc.add(labels + (label,), c * d)
        current = acc.result()
    return current


class _Complex:
    """Shared plumbing: caches and the unit label of the carrier."""

    kind = ''
    step = 0

    def __init__(self, bialgebroid, module: CoefficientModule, normalized: bool = True,
                 use_free: bool = True):
        self.bialgebroid = bialgebroid
        self.carrier = bialgebroid.carrier
        self.module = module
        self.normalized = normalized
        self.use_free = use_free
        self.unit_label = self.carrier.unit_label()
        self._lock = threading.RLock()
        self._bases: Dict[int, DegreeBasis] = {}

    def e(self, label: Label) -> FreeVector:
        return FreeVector.basis(label)

    def _cached_basis(self, n: int, build: Callable[[], DegreeBasis]) -> DegreeBasis:
        with self._lock:
            basis = self._bases.get(n)
            if basis is None:
                basis = build()
                self._bases[n] = basis
                logger.debug(f"{self.name} degree {n}: {len(basis)} basis vectors")
            return basis

    @property
    def name(self) -> str:
        suffix = '' if self.normalized else ' (unnormalized)'
        return f"{self.kind}({self.bialgebroid.name}, {self.module.name}){suffix}"

    @staticmethod
    def _check_index(i: int, low: int, high: int, what: str) -> None:
        if i < low or i > high:
            raise ValueError(f"{what} index {i} outside {low}..{high}")


class ChainComplex(_Complex):
    """
    C_n(U, M) = M ⊗_Aop (▸U◁)^{⊗_Aop n} with labels (m, u¹, …, uⁿ).
    """

    kind = CHAIN
    step = -1

    def __init__(self, bialgebroid, module: CoefficientModule, normalized: bool = True,
                 use_free: bool = True):
        super().__init__(bialgebroid, module, normalized, use_free)
        self._endpoint = module.left_endpoint()
        self._degenerate: Dict[int, SubspaceSolver] = {}

    def space(self, n: int):
        return self.bialgebroid.tensor_space([BOND_AOP] * n, left=self._endpoint,
                                             use_free=self.use_free)

    def nf(self, n: int, c: FreeVector) -> FreeVector:
        return self.space(n).normal_form(c)

    def _map(self, n: int, c: FreeVector, fn: Callable[[Tuple], FreeVector], target: int) -> FreeVector:
        acc = Accumulator()
        for label, coeff in c.terms():
            acc.add_vector(fn(label), coeff)
        return self.nf(target, acc.result())

    # -- simplicial structure --------------------------------------------

    def face(self, i: int, n: int, c: FreeVector) -> FreeVector:
        """
        d_0 = (m, …, u^{n−1} t(ε(uⁿ))), d_i multiplies u^{n−i}u^{n−i+1}, d_n = (mu¹, u², …).
        """
        if n == 0:
            return FreeVector.zero()
        self._check_index(i, 0, n, 'face')
        B = self.bialgebroid
        U = self.carrier
        M = self.module

        def apply(label):
            if i == 0:
                last = B.epsilon(self.e(label[n]))
                if n == 1:
                    return M.lift(self.e(label[0]), M.blact, last).map_labels(lambda m: (m,))
                head = label[:n - 1]
                return U.multiply(self.e(label[n - 1]), B.t(last)).map_labels(
                    lambda x: head + (x,))
            if i == n:
                first = M.act_right(self.e(label[0]), self.e(label[1]))
                rest = label[2:]
                return first.map_labels(lambda m: (m,) + rest)
            k = n - i
            merged = U.multiply_basis(label[k], label[k + 1])
            return merged.map_labels(lambda x: label[:k] + (x,) + label[k + 2:])

        return self._map(n, c, apply, n - 1)

    def degeneracy(self, j: int, n: int, c: FreeVector) -> FreeVector:
        """s_j inserts 1_U at tuple position n − j + 1 (s_n right after m, s_0 at the end)."""
        self._check_index(j, 0, n, 'degeneracy')
        position = n - j + 1
        one = self.carrier.unit()

        def apply(label):
            return one.map_labels(lambda x: label[:position] + (x,) + label[position:])

        return self._map(n, c, apply, n + 1)

    def b(self, n: int, c: FreeVector) -> FreeVector:
        """b = Σ (−1)^i d_i"""
        acc = Accumulator()
        for i in range(n + 1):
            acc.add_vector(self.face(i, n, c), -1 if i % 2 else 1)
        return acc.result()

    # -- cyclic structure -------------------------------------------------

    def cyclic_t(self, n: int, c: FreeVector) -> FreeVector:
        """
        t(m, u¹, …, uⁿ) = (m₍₀₎u¹₊, u²₊, …, uⁿ₊, uⁿ₋⋯u¹₋m₍₋₁₎); t(m) = m₍₀₎m₍₋₁₎.

        Raises:
            PreconditionError: Without a translation map or a coaction on M
        """
        B = self.bialgebroid
        if not hasattr(B, 'translation'):
            raise PreconditionError("The cyclic operator needs a left Hopf algebroid")
        U = self.carrier
        M = self.module
        if not (M.has_coaction and M.has_right_action):
            raise PreconditionError(f"{M.name} needs a right action and a left coaction")

        def apply(label):
            acc = Accumulator()
            m = label[0]
            translations = [list(B.translation(u).terms()) for u in label[1:]]
            for (v, k), cm in M.coaction(m).terms():
                if n == 0:
                    acc.add_vector(M.act_right(self.e(k), self.e(v)).map_labels(lambda x: (x,)), cm)
                    continue
                for combo in cartesian(*translations):
                    coeff = cm
                    for _, c in combo:
                        coeff *= c
                    pluses = [p for (p, _), _ in combo]
                    minuses = [q for (_, q), _ in combo]
                    first = M.act_right(self.e(k), self.e(pluses[0]))
                    last = U.product(*[self.e(q) for q in reversed(minuses)], self.e(v))
                    middle = tuple(pluses[1:])
                    for mm, c1 in first.terms():
                        for x, c2 in last.terms():
                            acc.add((mm,) + middle + (x,), coeff * c1 * c2)
            return acc.result()

        return self._map(n, c, apply, n)

    def t_power(self, k: int, n: int, c: FreeVector) -> FreeVector:
        for _ in range(k):
            c = self.cyclic_t(n, c)
        return c

    def norm_N(self, n: int, c: FreeVector) -> FreeVector:
        """𝒩 = Σ_{i=0}^{n} (−1)^{in} tⁱ"""
        acc = Accumulator()
        current = c
        for i in range(n + 1):
            acc.add_vector(current, -1 if (i * n) % 2 else 1)
            if i < n:
                current = self.cyclic_t(n, current)
        return acc.result()

    def extra_degeneracy(self, n: int, c: FreeVector) -> FreeVector:
        """s₋₁ = t s_n : C_n → C_{n+1}"""
        return self.cyclic_t(n + 1, self.degeneracy(n, n, c))

    def B_full(self, n: int, c: FreeVector) -> FreeVector:
        """B = (id − t) s₋₁ 𝒩 on the unnormalized module."""
        lifted = self.extra_degeneracy(n, self.norm_N(n, c))
        return lifted - self.cyclic_t(n + 1, lifted)

    def B(self, n: int, c: FreeVector) -> FreeVector:
        """s₋₁𝒩 read in the normalized complex."""
        return self.normalize(n + 1, self.extra_degeneracy(n, self.norm_N(n, c)))

    # -- normalization ----------------------------------------------------

    def _degenerate_solver(self, n: int) -> SubspaceSolver:
        with self._lock:
            solver = self._degenerate.get(n)
            if solver is None:
                solver = SubspaceSolver()
                if n > 0:
                    for label in self.space(n - 1).basis():
                        for j in range(n):
                            solver.add(self.degeneracy(j, n - 1, self.e(label)))
                self._degenerate[n] = solver
            return solver

    def is_degenerate_label(self, label: Tuple) -> bool:
        return any(u == self.unit_label for u in label[1:])

    def normalize(self, n: int, c: FreeVector) -> FreeVector:
        """Canonical representative modulo the span of the degeneracies."""
        if self.space(n).uses_free and self.unit_label is not None:
            return c.filter(lambda label: not self.is_degenerate_label(label))
        return self._degenerate_solver(n).reduce(c)

    # -- homology view ----------------------------------------------------

    def basis(self, n: int) -> DegreeBasis:
        def build():
            labels = self.space(n).basis()
            if not self.normalized:
                return DegreeBasis.from_labels(labels)
            if self.space(n).uses_free and self.unit_label is not None:
                return DegreeBasis.from_labels(l for l in labels if not self.is_degenerate_label(l))
            pivots = set(self._degenerate_solver(n).pivots())
            return DegreeBasis.from_labels(l for l in labels if l not in pivots)
        return self._cached_basis(n, build)

    def differential(self, n: int, c: FreeVector) -> FreeVector:
        if n == 0:
            return FreeVector.zero()
        value = self.b(n, c)
        return self.normalize(n - 1, value) if self.normalized else value


class CotorComplex(_Complex):
    """
    C^n_co(U, N) = (▷U◁)^{⊗_A n} ⊗_A N with labels (u¹, …, uⁿ, n).

    ``weight`` restricts PBW carriers to tuples of total monomial degree ``weight``.
    """

    kind = COTOR
    step = 1

    def __init__(self, bialgebroid, module: CoefficientModule, normalized: bool = True,
                 use_free: bool = True, weight: Optional[int] = None):
        super().__init__(bialgebroid, module, normalized, use_free)
        if not module.has_coaction:
            raise PreconditionError(f"{module.name} has no left U-coaction")
        self._endpoint = module.right_endpoint()
        self.weight = weight
        if weight is not None and self.carrier.is_finite:
            raise PreconditionError("Weights grade PBW carriers only")

    def space(self, n: int):
        return self.bialgebroid.tensor_space([BOND_A] * n, right=self._endpoint,
                                             use_free=self.use_free)

    def nf(self, n: int, z: FreeVector) -> FreeVector:
        return self.space(n).normal_form(z)

    def _map(self, z: FreeVector, fn: Callable[[Tuple], FreeVector], target: int) -> FreeVector:
        acc = Accumulator()
        for label, coeff in z.terms():
            acc.add_vector(fn(label), coeff)
        return self.nf(target, acc.result())

    # -- cosimplicial structure ------------------------------------------

    def coface(self, i: int, n: int, z: FreeVector) -> FreeVector:
        """
        δ_0 = (1, z), δ_i applies Δ to uⁱ, δ_{n+1} = (u¹, …, uⁿ, n₍₋₁₎, n₍₀₎).
        """
        self._check_index(i, 0, n + 1, 'coface')
        B = self.bialgebroid
        N = self.module

        def apply(label):
            if i == 0:
                return self.carrier.unit().map_labels(lambda x: (x,) + label)
            if i == n + 1:
                head = label[:n]
                return N.coaction(label[n]).map_labels(lambda vk: head + vk)
            k = i - 1
            return B.coproduct(label[k]).map_labels(lambda xy: label[:k] + xy + label[k + 1:])

        return self._map(z, apply, n + 1)

    def codegeneracy(self, i: int, n: int, z: FreeVector) -> FreeVector:
        """σ_i applies ε to u^{i+1}: (…, ε(u^{i+1}) ▷ u^{i+2}, …)."""
        if n == 0:
            raise ValueError("Degree 0 has no codegeneracies")
        self._check_index(i, 0, n - 1, 'codegeneracy')
        B = self.bialgebroid
        N = self.module

        def apply(label):
            eps = B.epsilon(self.e(label[i]))
            head = label[:i]
            if i == n - 1:
                image = N.lift(self.e(label[n]), N.comodule_left, eps)
                return image.map_labels(lambda m: head + (m,))
            image = self.carrier.multiply(B.s(eps), self.e(label[i + 1]))
            tail = label[i + 2:]
            return image.map_labels(lambda x: head + (x,) + tail)

        return self._map(z, apply, n - 1)

    def beta(self, n: int, z: FreeVector) -> FreeVector:
        """β = Σ (−1)^i δ_i"""
        acc = Accumulator()
        for i in range(n + 2):
            acc.add_vector(self.coface(i, n, z), -1 if i % 2 else 1)
        return acc.result()

    # -- cocyclic structure -----------------------------------------------

    def cyclic_tau(self, n: int, z: FreeVector) -> FreeVector:
        """
        τ(u¹, …, uⁿ, m) = (u¹₋₍₁₎u², …, u¹₋₍ₙ₋₁₎uⁿ, u¹₋₍ₙ₎m₍₋₁₎, m₍₀₎u¹₊); τ(m) = m₍₀₎m₍₋₁₎.

        Raises:
            PreconditionError: Without a translation map or a right U-action on N
        """
        B = self.bialgebroid
        if not hasattr(B, 'translation'):
            raise PreconditionError("The cocyclic operator needs a left Hopf algebroid")
        U = self.carrier
        N = self.module
        if not N.has_right_action:
            raise PreconditionError(f"{N.name} needs a right U-action")

        def apply(label):
            acc = Accumulator()
            m = label[n]
            if n == 0:
                for (v, k), c in N.coaction(m).terms():
                    acc.add_vector(N.act_right(self.e(k), self.e(v)).map_labels(lambda x: (x,)), c)
                return acc.result()
            rest = label[1:n]
            for (plus, minus), c in B.translation(label[0]).terms():
                for legs, d in B.iterated_coproduct(self.e(minus), n).terms():
                    factors = [U.multiply_basis(legs[j], rest[j]) for j in range(n - 1)]
                    for (v, k), f in N.coaction(m).terms():
                        last_u = U.multiply_basis(legs[n - 1], v)
                        last_n = N.act_right(self.e(k), self.e(plus))
                        expanded = tuple_products(factors + [last_u, last_n])
                        acc.add_vector(expanded, c * d * f)
            return acc.result()

        return self._map(z, apply, n)

    def tau_power(self, k: int, n: int, z: FreeVector) -> FreeVector:
        for _ in range(k):
            z = self.cyclic_tau(n, z)
        return z

    def norm_N(self, n: int, z: FreeVector) -> FreeVector:
        """𝒩 = Σ_{i=0}^{n} (−1)^{in} τⁱ"""
        acc = Accumulator()
        current = z
        for i in range(n + 1):
            acc.add_vector(current, -1 if (i * n) % 2 else 1)
            if i < n:
                current = self.cyclic_tau(n, current)
        return acc.result()

    def extra_codegeneracy(self, n: int, z: FreeVector) -> FreeVector:
        """σ₋₁ = σ_{n−1} τ : C^n → C^{n−1}"""
        return self.codegeneracy(n - 1, n, self.cyclic_tau(n, z))

    def B_full(self, n: int, z: FreeVector) -> FreeVector:
        """B = 𝒩 σ₋₁ (id − τ) : C^n → C^{n−1}."""
        if n == 0:
            return FreeVector.zero()
        return self.norm_N(n - 1, self.extra_codegeneracy(n, z - self.cyclic_tau(n, z)))

    def B(self, n: int, z: FreeVector) -> FreeVector:
        """𝒩 σ₋₁ read in the normalized complex."""
        if n == 0:
            return FreeVector.zero()
        return self.normalize(n - 1, self.norm_N(n - 1, self.extra_codegeneracy(n, z)))

    # -- normalization ----------------------------------------------------

    def normalize(self, n: int, z: FreeVector) -> FreeVector:
        """Projection P = P_{n−1}⋯P_0 onto ⋂ ker σ_j with P_j = id − δ_{j+1}σ_j."""
        for j in range(n):
            z = z - self.coface(j + 1, n - 1, self.codegeneracy(j, n, z))
        return z

    # -- homology view ----------------------------------------------------

    def _labels(self, n: int) -> List[Tuple]:
        if self.carrier.is_finite:
            return self.space(n).basis()
        if self.weight is None:
            raise PreconditionError(
                f"Cotor cochains over {self.carrier.name} need a weight to be finite-dimensional")
        if not self.space(n).uses_free:
            raise PreconditionError("Weighted cotor cochains need a free decomposition")
        one = self.bialgebroid.base_one
        monomials = [(one, exps) for exps in self.carrier.exponents_up_to(self.weight)]
        labels = []
        for combo in cartesian(monomials, repeat=n):
            if sum(sum(exps) for _, exps in combo) == self.weight:
                for m in self.module.basis():
                    labels.append(combo + (m,))
        return labels

    def basis(self, n: int) -> DegreeBasis:
        def build():
            labels = self._labels(n)
            if not self.normalized or n == 0:
                return DegreeBasis.from_labels(labels)
            solver = SubspaceSolver()
            for label in labels:
                solver.add(self.normalize(n, self.e(label)))
            return DegreeBasis(solver.rows(), solver.pivots())
        return self._cached_basis(n, build)

    def differential(self, n: int, z: FreeVector) -> FreeVector:
        return self.beta(n, z)


class HomComplex(_Complex):
    """
    C^p(U, N) = Hom_Aop(U^{⊗_Aop p}◁, N), stored on tuples of the free complement W
    as FreeVectors over (w-tuple, n) and extended by φ(t(h)w¹, …) = t(h)·φ(w).
    """

    kind = HOM
    step = 1

    def __init__(self, bialgebroid, module: CoefficientModule, normalized: bool = True,
                 use_free: bool = True):
        super().__init__(bialgebroid, module, normalized, use_free)
        if not module.has_left_action:
            raise PreconditionError(f"{module.name} has no left U-action")
        self.head = base_head(bialgebroid.base)
        self.base_one = bialgebroid.base_one

    def space(self, p: int):
        space = self.bialgebroid.tensor_space([BOND_AOP] * p, left=self.head, use_free=self.use_free)
        if not space.uses_free:
            raise PreconditionError("Hom cochains need a free decomposition of U over t(A)")
        return space

    def domain_labels(self, p: int) -> List[Tuple]:
        """The W-tuples on which cochains of arity p are determined."""
        if p == 0:
            return [()]
        space = self.space(p)
        factors = [space.factor_basis(k) for k in range(1, p + 1)]
        labels = [tuple(combo) for combo in cartesian(*factors)]
        if self.normalized:
            labels = [l for l in labels if self.unit_label not in l]
        return labels

    # -- evaluation -------------------------------------------------------

    @staticmethod
    def table(phi: FreeVector) -> Dict[Tuple, FreeVector]:
        """φ as a map from W-tuples to N."""
        values: Dict[Tuple, Accumulator] = {}
        for (w, n), c in phi.terms():
            values.setdefault(w, Accumulator()).add(n, c)
        return {w: acc.result() for w, acc in values.items()}

    def evaluate(self, p: int, phi: FreeVector, args: FreeVector,
                 table: Optional[Dict[Tuple, FreeVector]] = None) -> FreeVector:
        """
        φ on a vector over label tuples (h, u¹, …, u^p), the head h standing for t(h)·.
        """
        table = table if table is not None else self.table(phi)
        N = self.module
        acc = Accumulator()
        space = self.space(p)
        for label, coeff in args.terms():
            for reduced, c in space.normal_form_label(label).terms():
                value = table.get(reduced[1:])
                if value is None:
                    continue
                acc.add_vector(N.lift(value, N.ract_target, self.e(reduced[0])), coeff * c)
        return acc.result()

    def evaluate_tuple(self, p: int, phi: FreeVector, factors: Sequence[FreeVector],
                       table: Optional[Dict[Tuple, FreeVector]] = None) -> FreeVector:
        """φ(x¹, …, x^p) for elements x^i of U."""
        args = tuple_products([FreeVector.basis(self.base_one)] + list(factors))
        return self.evaluate(p, phi, args, table)

    def from_function(self, p: int, fn: Callable[[Tuple], FreeVector]) -> FreeVector:
        """Tabulate a cochain from its values on W-tuples."""
        acc = Accumulator()
        for w in self.domain_labels(p):
            for n, c in fn(w).terms():
                acc.add((w, n), c)
        return acc.result()

    def delta(self, p: int, phi: FreeVector) -> FreeVector:
        """
        δφ(u¹, …, u^{p+1}) = u¹φ(u², …) + Σ (−1)^i φ(…, uⁱu^{i+1}, …)
        + (−1)^{p+1} φ(u¹, …, u^p t(ε(u^{p+1}))).
        """
        B = self.bialgebroid
        U = self.carrier
        N = self.module
        table = self.table(phi)
        e = self.e

        def value(w):
            acc = Accumulator()
            rest = [e(x) for x in w[1:]]
            acc.add_vector(N.act_left(e(w[0]), self.evaluate_tuple(p, phi, rest, table)))
            for i in range(1, p + 1):
                merged = [e(x) for x in w[:i - 1]] + [U.multiply_basis(w[i - 1], w[i])] \
                    + [e(x) for x in w[i + 1:]]
                acc.add_vector(self.evaluate_tuple(p, phi, merged, table), -1 if i % 2 else 1)
            last_sign = -1 if (p + 1) % 2 else 1
            eps = B.epsilon(e(w[p]))
            if p == 0:
                acc.add_vector(self.evaluate(0, phi, eps.map_labels(lambda h: (h,)), table), last_sign)
            else:
                factors = [e(x) for x in w[:p - 1]] + [U.multiply(e(w[p - 1]), B.t(eps))]
                acc.add_vector(self.evaluate_tuple(p, phi, factors, table), last_sign)
            return acc.result()

        return self.from_function(p + 1, value)

    # -- homology view ----------------------------------------------------

    def basis(self, p: int) -> DegreeBasis:
        def build():
            return DegreeBasis.from_labels(
                (w, n) for w in self.domain_labels(p) for n in self.module.basis())
        return self._cached_basis(p, build)

    def differential(self, p: int, phi: FreeVector) -> FreeVector:
        return self.delta(p, phi)


def arity_zero(n_vector: FreeVector) -> FreeVector:
    """An element of N as a 0-cochain."""
    return n_vector.map_labels(lambda n: ((), n))


def _sample(labels: Sequence[Label], limit: Optional[int], seed: int) -> List[Label]:
    labels = list(labels)
    if limit is None or len(labels) <= limit:
        return labels
    return random.Random(seed).sample(labels, limit)


def simplicial_checks(chains: ChainComplex, max_degree: int = 3, limit: Optional[int] = 40,
                      seed: int = 0) -> List[CheckResult]:
    """Simplicial identities, b² = 0, t^{n+1} = id and the mixed complex relations."""
    if not chains.carrier.is_finite:
        raise PreconditionError("Chain checks need a finite-dimensional carrier")
    d, s = chains.face, chains.degeneracy
    labels = {n: _sample(chains.space(n).basis(), limit, seed + n) for n in range(max_degree + 2)}

    def faces():
        for n in range(2, max_degree + 2):
            for label in labels[n]:
                c = chains.e(label)
                for j in range(1, n + 1):
                    for i in range(j):
                        if d(i, n - 1, d(j, n, c)) != d(j - 1, n - 1, d(i, n, c)):
                            return f"d_{i}d_{j} ≠ d_{j - 1}d_{i} on {label!r}"
        return None

    def degeneracies():
        for n in range(max_degree + 1):
            for label in labels[n]:
                c = chains.e(label)
                for j in range(n + 1):
                    for i in range(j + 1):
                        if s(i, n + 1, s(j, n, c)) != s(j + 1, n + 1, s(i, n, c)):
                            return f"s_{i}s_{j} ≠ s_{j + 1}s_{i} on {label!r}"
        return None

    def mixed():
        for n in range(max_degree + 1):
            for label in labels[n]:
                c = chains.e(label)
                for j in range(n + 1):
                    lifted = s(j, n, c)
                    for i in range(n + 2):
                        lhs = d(i, n + 1, lifted)
                        if i < j:
                            rhs = s(j - 1, n - 1, d(i, n, c))
                        elif i in (j, j + 1):
                            rhs = c
                        else:
                            rhs = s(j, n - 1, d(i - 1, n, c))
                        if lhs != rhs:
                            return f"d_{i}s_{j} on {label!r}"
        return None

    def b_square():
        for n in range(2, max_degree + 2):
            for label in labels[n]:
                value = chains.b(n - 1, chains.b(n, chains.e(label)))
                if not value.is_zero():
                    return f"b² {label!r} = {value!r}"
        return None

    def cyclic_order():
        for n in range(max_degree + 1):
            for label in labels[n]:
                c = chains.e(label)
                if chains.t_power(n + 1, n, c) != c:
                    return f"t^{n + 1} ≠ id on {label!r}"
        return None

    def connes():
        for n in range(max_degree + 1):
            for label in labels[n]:
                c = chains.normalize(n, chains.e(label))
                if c.is_zero():
                    continue
                lifted = chains.B(n, c)
                square = chains.B(n + 1, lifted)
                if not square.is_zero():
                    return f"B² {label!r} = {square!r}"
                anti = chains.b(n + 1, lifted)
                if n > 0:
                    anti = anti + chains.B(n - 1, chains.normalize(n - 1, chains.b(n, c)))
                anti = chains.normalize(n, anti)
                if not anti.is_zero():
                    return f"(bB + Bb) {label!r} = {anti!r}"
        return None

    def full_B():
        for n in range(max_degree + 1):
            for label in labels[n]:
                c = chains.normalize(n, chains.e(label))
                if c.is_zero():
                    continue
                if chains.normalize(n + 1, chains.B_full(n, c)) != chains.B(n, c):
                    return f"(id − t)s₋₁𝒩 ≠ s₋₁𝒩 on {label!r}"
        return None

    return [
        run_check('chain.faces', 'd_i d_j = d_{j−1} d_i for i < j', faces),
        run_check('chain.degeneracies', 's_i s_j = s_{j+1} s_i for i ≤ j', degeneracies),
        run_check('chain.face_degeneracy', 'd_i s_j relations', mixed),
        run_check('chain.b_square', 'b² = 0', b_square),
        run_check('chain.cyclic_order', 't^{n+1} = id', cyclic_order),
        run_check('chain.mixed', 'B² = 0 and bB + Bb = 0 on normalized chains', connes),
        run_check('chain.normalized_B', '(id − t)s₋₁𝒩 = s₋₁𝒩 modulo degeneracies', full_B),
    ]


def cosimplicial_checks(cotor: CotorComplex, max_degree: int = 3, limit: Optional[int] = 40,
                        seed: int = 0) -> List[CheckResult]:
    """Cosimplicial identities, β² = 0, τ^{n+1} = id and the mixed complex relations."""
    d, s = cotor.coface, cotor.codegeneracy
    labels = {n: _sample(cotor._labels(n), limit, seed + n) for n in range(max_degree + 1)}

    def cofaces():
        for n in range(max_degree + 1):
            for label in labels[n]:
                z = cotor.e(label)
                for j in range(1, n + 3):
                    for i in range(j):
                        if d(j, n + 1, d(i, n, z)) != d(i, n + 1, d(j - 1, n, z)):
                            return f"δ_{j}δ_{i} ≠ δ_{i}δ_{j - 1} on {label!r}"
        return None

    def codegeneracies():
        for n in range(2, max_degree + 1):
            for label in labels[n]:
                z = cotor.e(label)
                for j in range(n - 1):
                    for i in range(j + 1):
                        if s(j, n - 1, s(i, n, z)) != s(i, n - 1, s(j + 1, n, z)):
                            return f"σ_{j}σ_{i} ≠ σ_{i}σ_{j + 1} on {label!r}"
        return None

    def mixed():
        for n in range(max_degree + 1):
            for label in labels[n]:
                z = cotor.e(label)
                for i in range(n + 2):
                    pushed = d(i, n, z)
                    for j in range(n + 1):
                        lhs = s(j, n + 1, pushed)
                        if i < j:
                            rhs = d(i, n - 1, s(j - 1, n, z))
                        elif i in (j, j + 1):
                            rhs = z
                        else:
                            rhs = d(i - 1, n - 1, s(j, n, z))
                        if lhs != rhs:
                            return f"σ_{j}δ_{i} on {label!r}"
        return None

    def beta_square():
        for n in range(max_degree):
            for label in labels[n]:
                value = cotor.beta(n + 1, cotor.beta(n, cotor.e(label)))
                if not value.is_zero():
                    return f"β² {label!r} = {value!r}"
        return None

    def cyclic_order():
        for n in range(max_degree + 1):
            for label in labels[n]:
                z = cotor.e(label)
                if cotor.tau_power(n + 1, n, z) != z:
                    return f"τ^{n + 1} ≠ id on {label!r}"
        return None

    def connes():
        for n in range(max_degree + 1):
            for label in labels[n]:
                z = cotor.normalize(n, cotor.e(label))
                if z.is_zero():
                    continue
                lowered = cotor.B(n, z)
                if n > 0 and not cotor.B(n - 1, lowered).is_zero():
                    return f"B² {label!r} ≠ 0"
                anti = cotor.B(n + 1, cotor.beta(n, z))
                if n > 0:
                    anti = anti + cotor.beta(n - 1, lowered)
                anti = cotor.normalize(n, anti)
                if not anti.is_zero():
                    return f"(βB + Bβ) {label!r} = {anti!r}"
        return None

    def full_B():
        for n in range(1, max_degree + 1):
            for label in labels[n]:
                z = cotor.normalize(n, cotor.e(label))
                if z.is_zero():
                    continue
                if cotor.normalize(n - 1, cotor.B_full(n, z)) != cotor.B(n, z):
                    return f"𝒩σ₋₁(id − τ) ≠ 𝒩σ₋₁ on {label!r}"
        return None

    return [
        run_check('cotor.cofaces', 'δ_j δ_i = δ_i δ_{j−1} for i < j', cofaces),
        run_check('cotor.codegeneracies', 'σ_j σ_i = σ_i σ_{j+1} for i ≤ j', codegeneracies),
        run_check('cotor.coface_codegeneracy', 'σ_j δ_i relations', mixed),
        run_check('cotor.beta_square', 'β² = 0', beta_square),
        run_check('cotor.cyclic_order', 'τ^{n+1} = id', cyclic_order),
        run_check('cotor.mixed', 'B² = 0 and βB + Bβ = 0 on normalized cochains', connes),
        run_check('cotor.normalized_B', '𝒩σ₋₁(id − τ) = 𝒩σ₋₁ on normalized cochains', full_B),
    ]


def hom_checks(hom: HomComplex, max_degree: int = 2) -> List[CheckResult]:
    def delta_square():
        for p in range(max_degree):
            for phi in hom.basis(p).vectors:
                value = hom.delta(p + 1, hom.delta(p, phi))
                if not value.is_zero():
                    return f"δ² {phi!r} = {value!r}"
        return None

    return [run_check('hom.delta_square', 'δ² = 0', delta_square)]

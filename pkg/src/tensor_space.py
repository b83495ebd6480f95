#!/usr/bin/env python3
"""
Balanced Tensor Spaces

Normal forms for iterated tensor products of U over A and Aᵒᵖ, with optional module
endpoints, realised by free decompositions of U with a relation-based quotient reducer
as cross-check and fallback.
"""

import logging
import threading
from itertools import product as cartesian
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from exceptions import PreconditionError
from linalg import Accumulator, FreeVector, Label, SubspaceSolver

logger = logging.getLogger(__name__)

# Bond kinds between neighbouring factors.
# 'A':   U◁ ⊗_A ▷U,     t(a)x ⊗ y = x ⊗ s(a)y
# 'Aop': ▸U ⊗_Aop U◁,   x t(a) ⊗ y = x ⊗ t(a)y
BOND_A = 'A'
BOND_AOP = 'Aop'


class Endpoint:
    """
    A module sitting at one end of a balanced tensor product.

    ``absorb(a, label)`` is the A-action through which base elements cross the
    neighbouring bond: for a left end it receives ·t(a) (the ▸ action), for a
    right end it receives a▷ (the left A-action).
    """

    def __init__(self, name: str, labels: Sequence[Label],
                 absorb: Callable[[Label, Label], FreeVector]):
        self.name = name
        self.labels = list(labels)
        self.absorb = absorb

    def basis(self) -> List[Label]:
        return list(self.labels)


def base_head(base) -> Endpoint:
    """
    Head factor recording the base element collected on the left of a Hom domain:
    a tuple (h; w¹,…) stands for (t(h)w¹, …).
    """
    return Endpoint('head', base.basis(), lambda a, h: base.multiply_basis(a, h))


class FreeDecomposition:
    """
    A basis W of U with U = ⊕_w side(A)·w, where side is s or t.

    For finite carriers W is chosen greedily among basis labels, unit first, accepting a
    label when all products side(a)·w stay jointly independent. PBW carriers are free
    on their monomials directly.
    """

    def __init__(self, bialgebroid, side: str):
        if side not in ('s', 't'):
            raise ValueError(f"Unknown side {side!r}")
        self.bialgebroid = bialgebroid
        self.side = side
        self.carrier = bialgebroid.carrier
        self.base = bialgebroid.base
        self._cache: Dict[Label, List[Tuple[Label, Label, object]]] = {}
        self._lock = threading.Lock()
        self.complement: List[Label] = []
        self.is_free = False
        self._solver: Optional[SubspaceSolver] = None
        if self.carrier.is_finite:
            self._build_finite()
        else:
            self.is_free = bialgebroid.source_equals_target_on_pbw()
            if not self.is_free:
                raise PreconditionError("PBW carriers need s = t for their free decomposition")

    def _side_map(self, a: Label) -> FreeVector:
        base_vector = FreeVector.basis(a)
        if self.side == 's':
            return self.bialgebroid.s(base_vector)
        return self.bialgebroid.t(base_vector)

    def _build_finite(self) -> None:
        labels = self.carrier.basis()
        unit = self.carrier.unit_label()
        ordered = ([unit] if unit is not None else []) + [l for l in labels if l != unit]
        solver = SubspaceSolver()
        for w in ordered:
            trial = solver.copy()
            accepted = True
            for a in self.base.basis():
                product = self.carrier.multiply(self._side_map(a), FreeVector.basis(w))
                if not trial.add(product, tag=(a, w)):
                    accepted = False
                    break
            if accepted:
                solver = trial
                self.complement.append(w)
            if solver.rank == len(labels):
                break
        self.is_free = solver.rank == len(labels)
        self._solver = solver
        logger.debug(f"Free decomposition over {self.side}(A) of {self.carrier.name}: "
                     f"W = {self.complement}, free = {self.is_free}")

    def decompose(self, label: Label) -> List[Tuple[Label, Label, object]]:
        """
        Write a basis element as Σ c·side(a)·w.

        Returns:
            list: (a, w, c) triples
        """
        cached = self._cache.get(label)
        if cached is not None:
            return cached
        if not self.carrier.is_finite:
            a, exps = label
            result = [(a, (self.bialgebroid.base_one, exps), 1)]
        else:
            combo = self._solver.solve(FreeVector.basis(label))
            if combo is None:
                raise PreconditionError(f"{label!r} is outside the free decomposition")
            result = [(a, w, c) for (a, w), c in combo.items()]
        with self._lock:
            self._cache[label] = result
        return result

    def contains(self, label: Label) -> bool:
        if not self.carrier.is_finite:
            return label[0] == self.bialgebroid.base_one
        return label in self.complement


class GradedTensorSpace:
    """
    One balanced tensor product such as M ⊗_Aop U ⊗_Aop ⋯ or U ⊗_A ⋯ ⊗_A N.

    Labels are tuples with one entry per factor (endpoints included). The sink is the
    rightmost factor reachable from the left through 'A' bonds only: factors to its left
    are pushed rightwards, factors to its right leftwards, so that every non-sink U
    factor ends in the free complement W and the sink absorbs the base coefficients.
    """

    def __init__(self, bialgebroid, bonds: Sequence[str], left: Optional[Endpoint] = None,
                 right: Optional[Endpoint] = None, use_free: bool = True):
        self.bialgebroid = bialgebroid
        self.carrier = bialgebroid.carrier
        self.bonds = tuple(bonds)
        for bond in self.bonds:
            if bond not in (BOND_A, BOND_AOP):
                raise ValueError(f"Unknown bond {bond!r}")
        self.left = left
        self.right = right
        self.length = len(self.bonds) + 1
        self.kinds = ['U'] * self.length
        if left is not None:
            self.kinds[0] = 'L'
        if right is not None:
            if self.length == 1 and left is not None:
                raise ValueError("A single factor cannot be both endpoints")
            self.kinds[-1] = 'R'
        sink = 0
        while sink < len(self.bonds) and self.bonds[sink] == BOND_A:
            sink += 1
        self.sink = sink
        if left is not None and sink > 0:
            raise PreconditionError("A left endpoint needs an Aop bond to its right")
        if right is not None and sink < self.length - 1:
            raise PreconditionError("A right endpoint needs only A bonds to its left")

        self._nf_cache: Dict[Tuple[Label, ...], FreeVector] = {}
        self._lock = threading.RLock()
        self._relation_solver: Optional[SubspaceSolver] = None
        self.decomposition_t = bialgebroid.free_decomposition('t') if use_free else None
        self.decomposition_s = None
        if use_free and any(self.bonds[k - 1] == BOND_A for k in range(sink + 1, self.length)):
            self.decomposition_s = bialgebroid.free_decomposition('s')
        self.uses_free = bool(use_free and self.decomposition_t.is_free and (
            self.decomposition_s is None or self.decomposition_s.is_free))
        if not self.uses_free and not self.carrier.is_finite:
            raise PreconditionError("Infinite-dimensional tensor spaces need a free decomposition")

    def __repr__(self) -> str:
        return (f"GradedTensorSpace(bonds={self.bonds}, left={getattr(self.left, 'name', None)}, "
                f"right={getattr(self.right, 'name', None)})")

    # -- normal forms -----------------------------------------------------

    def normal_form(self, vector: FreeVector) -> FreeVector:
        acc = Accumulator()
        for label, coeff in vector.terms():
            acc.add_vector(self.normal_form_label(label), coeff)
        return acc.result()

    def normal_form_label(self, label: Tuple[Label, ...]) -> FreeVector:
        cached = self._nf_cache.get(label)
        if cached is not None:
            return cached
        if len(label) != self.length:
            raise ValueError(f"Tensor label {label!r} has {len(label)} factors, expected {self.length}")
        if self.uses_free:
            result = self._free_normal_form(label)
        else:
            result = self.relation_solver().reduce(FreeVector.basis(label))
        with self._lock:
            self._nf_cache[label] = result
        return result

    def _free_normal_form(self, label: Tuple[Label, ...]) -> FreeVector:
        vector = FreeVector.basis(label)
        for k in range(self.sink):
            vector = self._push_right(vector, k)
        for k in range(self.length - 1, self.sink, -1):
            vector = self._push_left(vector, k)
        return vector

    def _factor_times(self, k: int, labels: Tuple[Label, ...], factor: FreeVector,
                      on_left: bool) -> FreeVector:
        """Replace factor k by factor·x (on_left=False) or x·factor (on_left=True)."""
        element = FreeVector.basis(labels[k])
        if on_left:
            product = self.carrier.multiply(factor, element)
        else:
            product = self.carrier.multiply(element, factor)
        return product.map_labels(lambda new: labels[:k] + (new,) + labels[k + 1:])

    def _push_right(self, vector: FreeVector, k: int) -> FreeVector:
        acc = Accumulator()
        for labels, coeff in vector.terms():
            for a, w, c in self.decomposition_t.decompose(labels[k]):
                moved = labels[:k] + (w,) + labels[k + 1:]
                if self.kinds[k + 1] == 'R':
                    image = self.right.absorb(a, moved[k + 1]).map_labels(
                        lambda n: moved[:k + 1] + (n,))
                else:
                    image = self._factor_times(k + 1, moved, self.bialgebroid.s(
                        FreeVector.basis(a)), on_left=True)
                acc.add_vector(image, coeff * c)
        return acc.result()

    def _push_left(self, vector: FreeVector, k: int) -> FreeVector:
        bond = self.bonds[k - 1]
        decomposition = self.decomposition_t if bond == BOND_AOP else self.decomposition_s
        acc = Accumulator()
        for labels, coeff in vector.terms():
            for a, w, c in decomposition.decompose(labels[k]):
                moved = labels[:k] + (w,) + labels[k + 1:]
                base_vector = FreeVector.basis(a)
                if bond == BOND_AOP:
                    if self.kinds[k - 1] == 'L':
                        image = self.left.absorb(a, moved[0]).map_labels(
                            lambda m: (m,) + moved[1:])
                    else:
                        image = self._factor_times(k - 1, moved, self.bialgebroid.t(base_vector),
                                                   on_left=False)
                else:
                    image = self._factor_times(k - 1, moved, self.bialgebroid.t(base_vector),
                                               on_left=True)
                acc.add_vector(image, coeff * c)
        return acc.result()

    # -- relation reducer -------------------------------------------------

    def full_basis(self) -> List[Tuple[Label, ...]]:
        """Every label tuple of the unbalanced tensor product."""
        factors = []
        for kind in self.kinds:
            if kind == 'L':
                factors.append(self.left.basis())
            elif kind == 'R':
                factors.append(self.right.basis())
            else:
                factors.append(self.carrier.basis())
        return [tuple(combo) for combo in cartesian(*factors)]

    def relations(self) -> List[FreeVector]:
        """Balancing relations: one base basis element moved across one bond."""
        result = []
        base_labels = self.bialgebroid.base.basis()
        for labels in self.full_basis():
            for k, bond in enumerate(self.bonds):
                for a in base_labels:
                    relation = self._relation(labels, k, bond, a)
                    if relation:
                        result.append(relation)
        return result

    def _relation(self, labels: Tuple[Label, ...], k: int, bond: str, a: Label) -> FreeVector:
        base_vector = FreeVector.basis(a)
        t_a = self.bialgebroid.t(base_vector)
        if bond == BOND_A:
            if self.kinds[k] == 'L':
                raise PreconditionError("A left endpoint needs an Aop bond to its right")
            lhs = self._factor_times(k, labels, t_a, on_left=True)
            if self.kinds[k + 1] == 'R':
                rhs = self.right.absorb(a, labels[k + 1]).map_labels(lambda n: labels[:k + 1] + (n,))
            else:
                rhs = self._factor_times(k + 1, labels, self.bialgebroid.s(base_vector), on_left=True)
        else:
            if self.kinds[k + 1] == 'R':
                raise PreconditionError("A right endpoint needs an A bond to its left")
            if self.kinds[k] == 'L':
                lhs = self.left.absorb(a, labels[0]).map_labels(lambda m: (m,) + labels[1:])
            else:
                lhs = self._factor_times(k, labels, t_a, on_left=False)
            rhs = self._factor_times(k + 1, labels, t_a, on_left=True)
        return lhs - rhs

    def relation_solver(self) -> SubspaceSolver:
        """Reducer over the full tensor basis modulo the balancing relations (finite only)."""
        if not self.carrier.is_finite:
            raise PreconditionError("Relation reducers need a finite-dimensional carrier")
        with self._lock:
            if self._relation_solver is None:
                relations = self.relations()
                logger.debug(f"Building relation reducer for {self!r} from {len(relations)} relations")
                self._relation_solver = SubspaceSolver(relations)
            return self._relation_solver

    # -- bases ------------------------------------------------------------

    def factor_basis(self, k: int) -> List[Label]:
        kind = self.kinds[k]
        if kind == 'L':
            return self.left.basis()
        if kind == 'R':
            return self.right.basis()
        if k == self.sink:
            return self.carrier.basis()
        decomposition = self.decomposition_t
        if k > self.sink and self.bonds[k - 1] == BOND_A:
            decomposition = self.decomposition_s
        if not self.carrier.is_finite:
            raise PreconditionError(f"{self.carrier.name} is infinite-dimensional")
        return list(decomposition.complement)

    def basis(self) -> List[Tuple[Label, ...]]:
        """Labels of the normal forms, which form a basis of the balanced product."""
        if not self.carrier.is_finite:
            raise PreconditionError(f"{self.carrier.name} is infinite-dimensional")
        if self.uses_free:
            return [tuple(combo) for combo in cartesian(
                *[self.factor_basis(k) for k in range(self.length)])]
        pivots = set(self.relation_solver().pivots())
        return [labels for labels in self.full_basis() if labels not in pivots]

    def dimension(self) -> int:
        return len(self.basis())

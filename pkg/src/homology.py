#!/usr/bin/env python3
"""
Homology

Bounded-degree (co)homology of any complex exposing ``basis(n)``, ``differential(n, v)``
and ``step``, with class representatives, boundary membership, induced operations on
classes, the total complex of a mixed complex and Connes' cyclic bicomplex.
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from complexes import DegreeBasis
from exceptions import PreconditionError, ResourceGuardError, StructureError
from linalg import Accumulator, FreeVector, Matrix, kernel_basis, rank, SubspaceSolver
from reports import CheckResult, run_check
from utils import max_basis_size

logger = logging.getLogger(__name__)


def differential_matrix(view, n: int, source: DegreeBasis, target: DegreeBasis) -> Matrix:
    """Matrix of d : C_n → C_{n+step} in the two degree bases."""
    rows: Dict[int, Dict[int, Fraction]] = {}
    for j, vector in enumerate(source.vectors):
        for i, c in target.coordinates(view.differential(n, vector)).items():
            rows.setdefault(i, {})[j] = c
    return Matrix(len(target), len(source), rows)


@dataclass
class HomologyResult:
    """Dimensions, representatives and boundary solvers of a complex in degrees 0..max_degree."""

    name: str
    step: int
    max_degree: int
    dimensions: Dict[int, int] = field(default_factory=dict)
    chain_dimensions: Dict[int, int] = field(default_factory=dict)
    ranks: Dict[int, int] = field(default_factory=dict)
    representatives: Dict[int, List[FreeVector]] = field(default_factory=dict)
    _view: object = None
    _boundaries: Dict[int, SubspaceSolver] = field(default_factory=dict)
    _classes: Dict[int, SubspaceSolver] = field(default_factory=dict)

    def table(self) -> List[int]:
        return [self.dimensions[n] for n in range(self.max_degree + 1)]

    def _require_degree(self, n: int) -> None:
        if n not in self.dimensions:
            raise PreconditionError(f"Degree {n} is outside the computed range 0..{self.max_degree}")

    def is_cycle(self, n: int, v: FreeVector) -> bool:
        return self._view.differential(n, v).is_zero()

    def is_boundary(self, n: int, v: FreeVector) -> bool:
        self._require_degree(n)
        return self._boundaries[n].contains(v)

    def boundary_witness(self, n: int, v: FreeVector) -> Optional[FreeVector]:
        """A preimage w with d(w) = v, or None when v is not a boundary."""
        self._require_degree(n)
        combination = self._boundaries[n].solve(v)
        if combination is None:
            return None
        source = self._view.basis(n - self.step)
        return source.vector({i: c for i, c in combination.terms()})

    def class_coordinates(self, n: int, v: FreeVector) -> List[Fraction]:
        """
        Coordinates of the class of a cycle in the representative basis.

        Raises:
            PreconditionError: If ``v`` is not a cycle
        """
        self._require_degree(n)
        if not self.is_cycle(n, v):
            raise PreconditionError(f"Input of degree {n} is not a cycle")
        combination = self._classes[n].solve(v)
        if combination is None:
            raise StructureError(f"Cycle of degree {n} escapes the computed homology", witness=repr(v))
        return [combination.coeff(i) for i in range(self.dimensions[n])]

    def to_dict(self) -> Dict[str, object]:
        return {
            'complex': self.name,
            'step': self.step,
            'dimensions': self.table(),
            'chain_dimensions': [self.chain_dimensions[n] for n in range(self.max_degree + 1)],
            'representatives': {str(n): [repr(v) for v in reps]
                                for n, reps in sorted(self.representatives.items())},
        }


def _guarded_basis(view, n: int, guard: int) -> DegreeBasis:
    basis = view.basis(n)
    if len(basis) > guard:
        raise ResourceGuardError(
            f"{view.name} degree {n} has {len(basis)} basis vectors, above the guard {guard}")
    return basis


def homology_table(view, max_degree: int = 4, guard: Optional[int] = None,
                   check_square: bool = True) -> HomologyResult:
    """
    Exact homology of ``view`` in degrees 0..max_degree.

    Args:
        view: A complex exposing basis, differential, step and name
        max_degree: Highest degree reported
        guard: Largest basis allowed per degree (defaults to the configured guard)
        check_square: Verify d∘d = 0 on the assembled matrices

    Returns:
        HomologyResult: Dimensions, ranks, representatives and boundary solvers

    Raises:
        ResourceGuardError: If a degree exceeds the basis-size guard
        StructureError: If d∘d ≠ 0
        PreconditionError: If a degree is infinite-dimensional
    """
    guard = guard if guard is not None else max_basis_size()
    step = view.step
    degrees = range(max_degree + 2)
    bases = {n: _guarded_basis(view, n, guard) for n in degrees}
    result = HomologyResult(view.name, step, max_degree, _view=view)

    matrices: Dict[int, Matrix] = {}
    for n in degrees:
        target = n + step
        if target < 0 or target not in bases:
            continue
        matrices[n] = differential_matrix(view, n, bases[n], bases[target])
        result.ranks[n] = rank(matrices[n])

    if check_square:
        for n, first in matrices.items():
            second = matrices.get(n + step)
            if second is not None and not (second @ first).is_zero():
                raise StructureError(f"d∘d ≠ 0 on {view.name} starting in degree {n}")

    for n in range(max_degree + 1):
        basis = bases[n]
        result.chain_dimensions[n] = len(basis)
        outgoing = matrices.get(n)
        if outgoing is None:
            cycles = list(basis.vectors)
        else:
            cycles = [basis.vector(dict(k.terms())) for k in kernel_basis(outgoing)]

        boundaries = SubspaceSolver()
        source_degree = n - step
        incoming = matrices.get(source_degree) if source_degree >= 0 else None
        if incoming is not None:
            for j, vector in enumerate(bases[source_degree].vectors):
                boundaries.add(view.differential(source_degree, vector), tag=j)
        # boundary rows carry preimage tags; class rows get their own
        classes = SubspaceSolver(boundaries.rows())
        representatives = []
        for cycle in cycles:
            if classes.add(cycle, tag=len(representatives)):
                representatives.append(cycle)

        result.dimensions[n] = len(representatives)
        result.representatives[n] = representatives
        result._boundaries[n] = boundaries
        result._classes[n] = classes
        expected = len(cycles) - boundaries.rank
        if expected != len(representatives):
            raise StructureError(f"Rank-nullity mismatch on {view.name} degree {n}")

    logger.info(f"✅ {view.name}: dimensions {result.table()}")
    return result


# -- operations on classes --------------------------------------------------

def induced_operation(op: Callable[..., FreeVector],
                      inputs: Sequence[Tuple[HomologyResult, int, FreeVector]],
                      target: HomologyResult, degree: int) -> List[Fraction]:
    """
    Apply a chain-level operation to cycle representatives and read the class of the result.

    Raises:
        PreconditionError: If an input is not a cycle
    """
    for result, n, v in inputs:
        if not result.is_cycle(n, v):
            raise PreconditionError(f"Operand of degree {n} in {result.name} is not a cycle")
    return target.class_coordinates(degree, op(*[v for _, _, v in inputs]))


def representative_independence(op: Callable[..., FreeVector],
                                inputs: Sequence[Tuple[HomologyResult, int, FreeVector]],
                                target: HomologyResult, degree: int,
                                rng: random.Random) -> Optional[str]:
    """Witness if perturbing one operand by a random boundary changes the induced class."""
    reference = induced_operation(op, inputs, target, degree)
    for k, (result, n, v) in enumerate(inputs):
        source_degree = n - result.step
        if source_degree < 0:
            continue
        basis = result._view.basis(source_degree)
        if not len(basis):
            continue
        w = basis.vectors[rng.randrange(len(basis))]
        perturbed = list(inputs)
        perturbed[k] = (result, n, v + result._view.differential(source_degree, w))
        if induced_operation(op, perturbed, target, degree) != reference:
            return f"operand {k} perturbed by d({w!r})"
    return None


# -- mixed complexes and Connes' bicomplex --------------------------------

class MixedTotalComplex:
    """
    Tot_n = ⊕_k C̄_{n−2k} of a mixed complex (b, B) with d(k, c) = (k, b c) + (k−1, B c).

    ``chains`` provides basis and the degree −1 differential, ``connes_B`` the degree +1 one.
    """

    step = -1

    def __init__(self, chains, connes_B: Callable[[int, FreeVector], FreeVector],
                 name: Optional[str] = None):
        self.chains = chains
        self.connes_B = connes_B
        self.name = name or f"Tot({chains.name})"

    def basis(self, n: int) -> DegreeBasis:
        labels = []
        for k in range(n // 2 + 1):
            piece = self.chains.basis(n - 2 * k)
            if piece.pivots is not None:
                raise PreconditionError("The total complex needs label bases in every degree")
            labels.extend((k, label) for (label, _) in (next(v.terms()) for v in piece.vectors))
        return DegreeBasis.from_labels(labels)

    @staticmethod
    def _split(v: FreeVector) -> Dict[int, FreeVector]:
        parts: Dict[int, Accumulator] = {}
        for (k, label), c in v.terms():
            parts.setdefault(k, Accumulator()).add(label, c)
        return {k: acc.result() for k, acc in parts.items()}

    def differential(self, n: int, v: FreeVector) -> FreeVector:
        acc = Accumulator()
        for k, part in self._split(v).items():
            degree = n - 2 * k
            if degree > 0:
                acc.add_vector(self.chains.differential(degree, part).map_labels(lambda l, k=k: (k, l)))
            if k > 0:
                acc.add_vector(self.connes_B(degree, part).map_labels(lambda l, k=k: (k - 1, l)))
        return acc.result()


class ConnesBicomplex:
    """
    The cyclic bicomplex of a cyclic module: columns alternate b and −b′, horizontal
    maps are 1 − t_s (odd to even columns) and N (even to odd), t_s = (−1)^n t.
    """

    step = -1

    def __init__(self, chains):
        if chains.normalized:
            raise PreconditionError("Connes' bicomplex is built on the unnormalized cyclic module")
        self.chains = chains
        self.name = f"CC({chains.name})"

    def basis(self, n: int) -> DegreeBasis:
        labels = []
        for p in range(n + 1):
            labels.extend((p, label) for label in self.chains.space(n - p).basis())
        return DegreeBasis.from_labels(labels)

    def _b_prime(self, q: int, c: FreeVector) -> FreeVector:
        acc = Accumulator()
        for i in range(q):
            acc.add_vector(self.chains.face(i, q, c), -1 if i % 2 else 1)
        return acc.result()

    def differential(self, n: int, v: FreeVector) -> FreeVector:
        parts: Dict[int, Accumulator] = {}
        for (p, label), c in v.terms():
            parts.setdefault(p, Accumulator()).add(label, c)
        acc = Accumulator()
        for p, part_acc in parts.items():
            part = part_acc.result()
            q = n - p
            if q > 0:
                vertical = self.chains.b(q, part) if p % 2 == 0 else -self._b_prime(q, part)
                acc.add_vector(vertical.map_labels(lambda l, p=p: (p, l)))
            if p > 0:
                if p % 2:
                    signed_t = self.chains.cyclic_t(q, part).scale(-1 if q % 2 else 1)
                    horizontal = part - signed_t
                else:
                    horizontal = self.chains.norm_N(q, part)
                acc.add_vector(horizontal.map_labels(lambda l, p=p: (p - 1, l)))
        return acc.result()


# -- consistency checks -----------------------------------------------------

def normalization_check(normalized_view, unnormalized_view, max_degree: int,
                        guard: Optional[int] = None) -> CheckResult:
    """Normalized and unnormalized homology have the same dimensions."""
    def body():
        left = homology_table(normalized_view, max_degree, guard).table()
        right = homology_table(unnormalized_view, max_degree, guard).table()
        if left != right:
            return f"normalized {left} vs unnormalized {right}"
        return None
    return run_check(f'homology.normalization.{normalized_view.kind}',
                     'normalization is a quasi-isomorphism', body)


def compare_tables(check_id: str, anchor: str, first: HomologyResult,
                   second: HomologyResult) -> CheckResult:
    def body():
        if first.table() != second.table():
            return f"{first.name} {first.table()} vs {second.name} {second.table()}"
        return None
    return run_check(check_id, anchor, body)

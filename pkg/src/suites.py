#!/usr/bin/env python3
"""
Identity Suites

Runs the structural validation of an instance and the five identity suites (operad,
cyclic, calculus, poisson, classical), collecting CheckResults into a Report.
"""

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from itertools import product as cartesian
from typing import Any, Callable, Dict, List, Optional

from bialgebroid import (LeftHopfAlgebroid, antipode_from_character, check_antipode,
                         validate_bialgebroid, validate_hopf)
from calculus import Calculus, graded_commutator
from classical import ClassicalOracle
from coefficients import CoefficientModule, module_checks, right_character
from complexes import (ChainComplex, CotorComplex, HomComplex, cosimplicial_checks,
                       hom_checks, simplicial_checks)
from exceptions import PreconditionError, StructureError
from homology import (ConnesBicomplex, HomologyResult, MixedTotalComplex, compare_tables,
                      homology_table, normalization_check, representative_independence)
from instances import Instance
from linalg import FreeVector
from operad import CotorOperad, Operad, desuspend, sign
from poisson import (cyclic_poisson_homology, hochschild_composition_checks,
                     poisson_boundary_check)
from reports import SKIPPED, CheckResult, Report, run_check
from utils import max_basis_size, progress

logger = logging.getLogger(__name__)

SUITES = ('operad', 'cyclic', 'calculus', 'poisson', 'classical')


def collect(check_id: str, anchor: str, build: Callable[[], List[CheckResult]]) -> List[CheckResult]:
    """Run a group of checks whose setup may itself be impossible on this instance."""
    try:
        return build()
    except PreconditionError as e:
        logger.warning(f"Skipping {check_id}: {e}")
        return [CheckResult(check_id, anchor, SKIPPED, detail=f"precondition: {e}")]


class _Classes:
    """Lazily computed cohomology with its (degree, representative) pairs."""

    def __init__(self, view, max_degree: int, guard: Optional[int]):
        self.view = view
        self.max_degree = max_degree
        self.guard = guard
        self._result: Optional[HomologyResult] = None

    @property
    def result(self) -> HomologyResult:
        if self._result is None:
            self._result = homology_table(self.view, self.max_degree, self.guard)
        return self._result

    def pairs(self):
        return [(p, x) for p in range(self.max_degree + 1) for x in self.result.representatives[p]]

    def is_boundary(self, n: int, v) -> bool:
        return self.result.is_boundary(n, v)


def gerstenhaber_checks(operad: Operad, max_degree: int = 2, guard: Optional[int] = None,
                        rng: Optional[random.Random] = None) -> List[CheckResult]:
    """
    Graded commutativity of ⌣, graded Jacobi and Leibniz modulo coboundaries on class
    representatives, and independence of both products from the representative.
    """
    rng = rng or random.Random(0)
    classes = _Classes(operad.complex, max_degree, guard)
    cup, bracket = operad.cup, operad.bracket
    kind = operad.kind

    def commutative():
        for (p, x), (q, y) in cartesian(classes.pairs(), repeat=2):
            if p + q > max_degree:
                continue
            v = cup(p, x, q, y) - cup(q, y, p, x).scale(sign(p * q))
            if not classes.is_boundary(p + q, v):
                return f"degrees {p},{q}: {x!r}, {y!r}"
        return None

    def jacobi():
        for (p, x), (q, y), (r, z) in cartesian(classes.pairs(), repeat=3):
            n = p + q + r - 2
            if not 0 <= n <= max_degree or min(p + q, q + r, p + r) < 1:
                continue
            lhs = bracket(p, x, q + r - 1, bracket(q, y, r, z))
            rhs = (bracket(p + q - 1, bracket(p, x, q, y), r, z)
                   + bracket(q, y, p + r - 1, bracket(p, x, r, z)).scale(
                       sign(desuspend(p) * desuspend(q))))
            if not classes.is_boundary(n, lhs - rhs):
                return f"degrees {p},{q},{r}"
        return None

    def leibniz():
        for (p, x), (q, y), (r, z) in cartesian(classes.pairs(), repeat=3):
            n = p + q + r - 1
            if not 0 <= n <= max_degree or min(p + q, p + r) < 1:
                continue
            lhs = bracket(p, x, q + r, cup(q, y, r, z))
            rhs = (cup(p + q - 1, bracket(p, x, q, y), r, z)
                   + cup(q, y, p + r - 1, bracket(p, x, r, z)).scale(sign(desuspend(p) * q)))
            if not classes.is_boundary(n, lhs - rhs):
                return f"degrees {p},{q},{r}"
        return None

    def well_defined():
        table = classes.result
        for (p, x), (q, y) in cartesian(classes.pairs(), repeat=2):
            inputs = [(table, p, x), (table, q, y)]
            if p + q <= max_degree:
                witness = representative_independence(
                    lambda a, b: cup(p, a, q, b), inputs, table, p + q, rng)
                if witness:
                    return f"⌣ in degrees {p},{q}: {witness}"
            if 0 <= p + q - 1 <= max_degree and p + q >= 1:
                witness = representative_independence(
                    lambda a, b: bracket(p, a, q, b), inputs, table, p + q - 1, rng)
                if witness:
                    return f"{{,}} in degrees {p},{q}: {witness}"
        return None

    return [
        run_check(f'gerstenhaber.{kind}.cup_commutative', 'φ⌣ψ = (−1)^{pq} ψ⌣φ in cohomology',
                  commutative),
        run_check(f'gerstenhaber.{kind}.jacobi',
                  '{x,{y,z}} = {{x,y},z} + (−1)^{|p||q|}{y,{x,z}} in cohomology', jacobi),
        run_check(f'gerstenhaber.{kind}.leibniz',
                  '{x,y⌣z} = {x,y}⌣z + (−1)^{|p|q} y⌣{x,z} in cohomology', leibniz),
        run_check(f'gerstenhaber.{kind}.well_defined', 'products independent of representatives',
                  well_defined),
    ]


def bv_checks(operad: CotorOperad, max_degree: int = 2,
              guard: Optional[int] = None) -> List[CheckResult]:
    """The bracket is generated by Connes' B on the normalized Cotor cochains, up to coboundaries."""
    normalized = CotorComplex(operad.bialgebroid, operad.module, normalized=True)
    classes = _Classes(normalized, max_degree, guard)

    def defect(p, x, q, y):
        def cup(a, u, b, v):
            if a < 0 or b < 0:
                return FreeVector.zero()
            return operad.cup(a, u, b, v)

        product = cup(p, x, q, y)
        generated = (normalized.B(p + q, product)
                     - cup(p - 1, normalized.B(p, x), q, y)
                     - cup(p, x, q - 1, normalized.B(q, y)).scale(sign(p)))
        return normalized.normalize(p + q - 1, operad.bracket(p, x, q, y)
                                    - generated.scale(sign(p)))

    def generator():
        for (p, x), (q, y) in cartesian(classes.pairs(), repeat=2):
            if not 1 <= p + q <= max_degree + 1:
                continue
            if not classes.is_boundary(p + q - 1, defect(p, x, q, y)):
                return f"degrees {p},{q}: {x!r}, {y!r}"
        return None

    def square():
        for p, x in classes.pairs():
            if p >= 2 and not normalized.B(p - 1, normalized.B(p, x)).is_zero():
                return f"degree {p}: {x!r}"
        return None

    return [
        run_check('bv.cotor.B_square', 'B² = 0', square),
        run_check('bv.cotor.generator',
                  '{a,b} − (−1)^p(B(a⌣b) − Ba⌣b − (−1)^p a⌣Bb) is a coboundary', generator),
    ]


class SuiteRunner:
    """
    Runs validation and identity suites on one instance with the configured bounds.
    """

    def __init__(self, instance: Instance, config: Optional[Dict[str, Any]] = None, seed: int = 0):
        """
        Initialize the SuiteRunner.

        Args:
            instance: Parsed instance
            config: Configuration dictionary (suites, algebra and homology sections)
            seed: Seed for the sampled checks
        """
        config = config or {}
        suites_config = config.get('suites', {}) or {}
        algebra_config = config.get('algebra', {}) or {}
        self.instance = instance
        self.seed = seed
        self.max_arity = int(suites_config.get('max_arity', 2))
        self.max_degree = int(suites_config.get('max_degree', 3))
        self.cyclic_degree = int(suites_config.get('cyclic_degree', 4))
        self.samples = int(suites_config.get('samples', 24))
        self.show_progress = bool(suites_config.get('progress', False))
        self.workers = max(1, int(suites_config.get('workers', 4)))
        self.pbw_degree = int(algebra_config.get('pbw_validation_degree', 3))
        self.guard = max_basis_size(config)

    @property
    def bialgebroid(self):
        return self.instance.bialgebroid

    def _report(self, title: str, checks: List[CheckResult], **metadata) -> Report:
        report = Report(title, self.instance.name, checks, metadata={
            'seed': self.seed, 'max_arity': self.max_arity, 'max_degree': self.max_degree,
            'cyclic_degree': self.cyclic_degree,
            **metadata})
        totals = report.totals()
        status = '✅' if report.ok else '❌'
        logger.info(f"{status} {title} on {self.instance.name}: {totals['pass']} passed, "
                    f"{totals['fail']} failed, {totals['skipped']} skipped")
        return report

    # -- validation -------------------------------------------------------

    def validate(self) -> Report:
        """Bialgebroid and Hopf axioms, coefficient module flags and operad construction."""
        B = self.bialgebroid
        checks = validate_bialgebroid(B, self.pbw_degree)
        if isinstance(B, LeftHopfAlgebroid):
            checks.extend(validate_hopf(B, self.pbw_degree))
        flags = {}
        for name in progress(sorted(self.instance.coefficient_specs), 'coefficients',
                             self.show_progress):
            module = self.instance.coefficient(name)
            module_flags, module_results = module_checks(module)
            flags[name] = module_flags.to_dict()
            checks.extend(module_results)
            checks.extend(self._antipode(name, module, module_flags.is_ayd))
            for kind, build in (('hom', self.instance.hom_operad), ('cotor', self.instance.cotor_operad)):
                checks.extend(self._construct(kind, name, build))
        return self._report('validate', checks, flags=flags)

    def _antipode(self, name: str, module: CoefficientModule,
                  ayd: Optional[bool]) -> List[CheckResult]:
        """S u = t(∂u₊)u₋ from the right character of an aYD base module."""
        B = self.bialgebroid
        if not (ayd and isinstance(B, LeftHopfAlgebroid) and B.is_finite):
            return []
        try:
            character = right_character(module)
        except (StructureError, PreconditionError) as e:
            logger.debug(f"No antipode from {name}: {e}")
            return []
        return [CheckResult(f'{name}.{check.id}', check.anchor, check.status, check.witness, check.detail)
                for check in check_antipode(B, antipode_from_character(B, character))]

    def _construct(self, kind: str, name: str, build: Callable[..., Operad]) -> List[CheckResult]:
        anchor = f"{kind} operad with coefficients in {name}"
        try:
            operad = build(name, strict=False)
        except PreconditionError as e:
            return [CheckResult(f'{kind}.{name}.construction', anchor, SKIPPED,
                                detail=f"precondition: {e}")]
        return [CheckResult(f'{kind}.{name}.{check.id.split(".", 1)[1]}', check.anchor,
                            check.status, check.witness, check.detail)
                for check in operad.construction_checks]

    # -- suites -----------------------------------------------------------

    def run(self, suite: str) -> Report:
        """
        Run one named suite.

        Raises:
            ValueError: For an unknown suite name
        """
        if suite not in SUITES:
            raise ValueError(f"Unknown suite {suite!r}; choose from {', '.join(SUITES)}")
        logger.info(f"Running {suite} suite on {self.instance.name} (seed {self.seed})")
        checks = getattr(self, f'_{suite}_suite')()
        return self._report(f'{suite} suite', checks, suite=suite)

    def run_all(self) -> Report:
        """Every suite on a thread pool; records are merged and sorted by id."""
        logger.info(f"Running all suites on {self.instance.name} with {self.workers} workers")
        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            futures = {suite: pool.submit(getattr(self, f'_{suite}_suite')) for suite in SUITES}
            checks = [check for suite in SUITES for check in futures[suite].result()]
        return self._report('all suites', checks, suite='all')

    def _operad_suite(self) -> List[CheckResult]:
        checks: List[CheckResult] = []
        rng = random.Random(self.seed)
        for kind, build in (('hom', self.instance.hom_operad), ('cotor', self.instance.cotor_operad)):
            def group(build=build):
                operad = build(strict=False)
                return (list(operad.construction_checks)
                        + operad.relation_checks(self.max_arity)
                        + operad.structure_checks(self.max_arity)
                        + gerstenhaber_checks(operad, self.max_arity, self.guard, rng))
            checks.extend(collect(f'{kind}.operad', f'{kind} operad with multiplication', group))
        return checks

    def _cyclic_suite(self) -> List[CheckResult]:
        B = self.bialgebroid
        module = self.instance.coefficient()
        degree = self.max_degree
        checks: List[CheckResult] = []

        def chain_group():
            chains = ChainComplex(B, module, normalized=False)
            normalized = ChainComplex(B, module, normalized=True)
            results = simplicial_checks(chains, self.cyclic_degree, limit=None, seed=self.seed)
            results.append(normalization_check(normalized, chains, degree, self.guard))

            def connes_vs_mixed():
                mixed = homology_table(MixedTotalComplex(normalized, normalized.B), degree, self.guard)
                connes = homology_table(ConnesBicomplex(chains), degree, self.guard)
                if mixed.table() != connes.table():
                    return f"mixed {mixed.table()} vs Connes {connes.table()}"
                return None
            results.append(run_check('cyclic.connes_vs_mixed',
                                     'Tot(b, B) and the cyclic bicomplex agree', connes_vs_mixed))
            return results

        def cotor_group():
            cotor = CotorComplex(B, module, normalized=False)
            results = cosimplicial_checks(cotor, self.cyclic_degree, limit=None, seed=self.seed)
            results.append(normalization_check(CotorComplex(B, module, normalized=True), cotor,
                                               degree, self.guard))
            return results

        def hom_group():
            hom = HomComplex(B, module, normalized=False)
            return hom_checks(hom, degree) + [
                normalization_check(HomComplex(B, module, normalized=True), hom, degree, self.guard)]

        def cyclic_operad_group():
            operad = self.instance.cotor_operad(strict=False)
            return (operad.cyclic_checks(self.max_arity, degree)
                    + bv_checks(operad, self.max_arity, self.guard))

        checks.extend(collect('chain.cyclic_module', 'para-cyclic chain module', chain_group))
        checks.extend(collect('cotor.cocyclic_module', 'para-cocyclic cotor module', cotor_group))
        checks.extend(collect('hom.cochain_complex', 'Hom cochain complex', hom_group))
        checks.extend(collect('cotor.cyclic_operad', 'cyclic operad with multiplication',
                              cyclic_operad_group))
        return checks

    def _calculus_suite(self) -> List[CheckResult]:
        def group():
            calculus = self.instance.calculus()
            shortcut = bool(getattr(calculus.carrier, 'commutative', False))
            return (calculus.checks(self.max_arity, self.max_degree, shortcut)
                    + homotopy_checks(calculus, self.max_arity, self.max_degree, self.guard))
        return collect('calculus', 'noncommutative differential calculus', group)

    def _poisson_suite(self) -> List[CheckResult]:
        checks: List[CheckResult] = []
        degree = self.max_degree
        for name in progress(self.instance.poisson_names(), 'poisson', self.show_progress):
            anchor = f"{name} is a triangular Poisson structure"
            try:
                poisson = self.instance.poisson(name)
            except PreconditionError as e:
                checks.append(CheckResult(f'poisson.{name}.triangular', anchor, SKIPPED,
                                          detail=f"precondition: {e}"))
                continue
            except StructureError as e:
                checks.append(run_check(f'poisson.{name}.triangular', anchor,
                                        lambda e=e: e.witness or str(e)))
                continue
            checks.append(run_check(f'poisson.{name}.triangular', anchor, lambda: None))
            checks.extend(poisson.checks(degree, self.max_arity))
            checks.extend(collect(f'poisson.{name}.koszul', 'Koszul bracket identities',
                                  lambda p=poisson: p.koszul_checks(degree)))
            checks.extend(collect(f'poisson.{name}.strong_differential', 'β^τ and B as derivations',
                                  lambda p=poisson: p.strong_differential_checks(min(2, degree))))
            checks.extend(collect(f'poisson.{name}.hochschild_boundary', 'explicit b^π on Aᵉ',
                                  lambda p=poisson: [poisson_boundary_check(p, degree)]))
            if name == 'mu':
                checks.extend(collect('poisson.mu.bracket_vanishes', '{·,·}_μ = 0 on homology',
                                      lambda p=poisson: [p.bracket_vanishes(degree)]))
                checks.extend(collect('poisson.mu.cyclic_vs_connes', 'HC^μ = HC',
                                      lambda p=poisson: self._cyclic_mu(p)))
        operad = self.instance.hom_operad(strict=False)
        checks.extend(collect('hochschild.insertion', 'Gerstenhaber insertion',
                              lambda: hochschild_composition_checks(
                                  operad, self.max_arity, self.samples, self.seed)))
        return checks

    def _cyclic_mu(self, poisson) -> List[CheckResult]:
        degree = self.max_degree
        calculus: Calculus = poisson.calculus
        cyclic = cyclic_poisson_homology(poisson, degree)
        connes = homology_table(ConnesBicomplex(calculus.chains), degree, self.guard)
        return [compare_tables('poisson.mu.cyclic_vs_connes',
                               'cyclic Poisson homology of μ = Connes cyclic homology',
                               cyclic, connes)]

    def _classical_suite(self) -> List[CheckResult]:
        lie = self.instance.lie
        if lie is None:
            return [CheckResult('classical', 'exterior algebra oracle', SKIPPED,
                                detail="precondition: instance is not a Lie-Rinehart enveloping algebra")]

        def group():
            oracle = ClassicalOracle(lie, self.bialgebroid)
            return oracle.checks(self.max_degree, self.max_arity)
        return collect('classical', 'exterior algebra oracle', group)


def homotopy_checks(calculus: Calculus, max_arity: int = 2, max_degree: int = 3,
                    guard: Optional[int] = None) -> List[CheckResult]:
    """
    Identities of the calculus that hold on homology only: the Cartan homotopy formula
    and [ι_ψ, ℒ_φ] = ι_{{ψ,φ}}, for normalized cocycles φ, ψ and normalized cycles.
    """
    B = calculus.bialgebroid
    cochains = _Classes(HomComplex(B, calculus.operad.module, normalized=True), max_arity, guard)
    chains = _Classes(calculus.normalized, max_degree, guard)
    normalize = calculus.normalized.normalize

    def cartan():
        for (p, phi), (n, c) in cartesian(cochains.pairs(), chains.pairs()):
            target = n - desuspend(p)
            if not 0 <= target <= max_degree:
                continue
            if not chains.is_boundary(target, calculus.cartan_defect(p, phi)(n, c)):
                return f"arity {p}, degree {n}: φ = {phi!r}, c = {c!r}"
        return None

    def contraction():
        operad = calculus.operad
        for (q, psi), (p, phi), (n, c) in cartesian(cochains.pairs(), cochains.pairs(), chains.pairs()):
            if p + q < 1:
                continue
            target = n - q - desuspend(p)
            if not 0 <= target <= max_degree:
                continue
            commutator = graded_commutator(calculus.iota(q, psi), calculus.lie(p, phi))(n, c)
            bracketed = calculus.cap(p + q - 1, operad.bracket(q, psi, p, phi), n, c)
            if not chains.is_boundary(target, normalize(target, commutator - bracketed)):
                return f"arities {q},{p}, degree {n}"
        return None

    return [
        run_check('calculus.cartan_homotopy', 'ℒ_φ − [B, ι_φ] maps cycles to boundaries', cartan),
        run_check('calculus.contraction_lie', '[ι_ψ, ℒ_φ] = ι_{{ψ,φ}} on homology', contraction),
    ]

#!/usr/bin/env python3
"""
Instance Files

JSON instance documents (base algebra, carrier, structure tables, coefficient modules and
Poisson structures) and the (co)chain operand files used by the evaluator.
"""

import json
import logging
import os
from typing import Any, Callable, Dict, List, Mapping, Optional, Tuple

from algebra import (
    DEFAULT_MAX_DIM, LieRinehartAlgebra, StructureConstantAlgebra, abelian_lie_rinehart,
    cyclic_group_algebra, dual_numbers_lie_rinehart, heisenberg_lie_rinehart, scalar_algebra,
    truncated_polynomial_algebra
)
from bialgebroid import (
    LazyTable, LeftBialgebroid, LeftHopfAlgebroid, build_ae, build_group, build_hopf, build_vl
)
from calculus import Calculus
from coefficients import (
    CoefficientModule, adjoint_module, base_module, counit_right_action, enveloping_right_action,
    induced_right_action, left_regular_module, lie_rinehart_right_action, trivial_module,
    twisted_base_module
)
from exceptions import InputError, PreconditionError
from linalg import FreeVector, Label, format_scalar, to_scalar
from operad import CotorOperad, HomOperad
from poisson import PoissonStructure, euler_poisson_cochain, hochschild_cochain
from utils import from_json_label, to_json_label

logger = logging.getLogger(__name__)

KINDS = ('explicit', 'enveloping', 'group', 'hopf_algebra', 'lie_rinehart')
OPERAND_KINDS = ('chain', 'cochain', 'cotor')


# -- low-level readers ------------------------------------------------------

def _require(document: Mapping, key: str, where: str) -> Any:
    if not isinstance(document, Mapping) or key not in document:
        raise InputError(f"Missing field '{key}' in {where}")
    return document[key]


def parse_vector(value: Any, where: str) -> FreeVector:
    """
    A vector is a list of [label, coefficient] pairs, or an object {label: coefficient}
    when labels are strings. Coefficients are integers or "p/q" strings.
    """
    if isinstance(value, Mapping):
        pairs = list(value.items())
    elif isinstance(value, list):
        pairs = []
        for k, item in enumerate(value):
            if not isinstance(item, list) or len(item) != 2:
                raise InputError(f"Entry {k} of {where} is not a [label, coefficient] pair")
            pairs.append((item[0], item[1]))
    else:
        raise InputError(f"{where} must be a list of [label, coefficient] pairs")
    try:
        return FreeVector.from_pairs((from_json_label(label), to_scalar(coeff)) for label, coeff in pairs)
    except InputError as e:
        raise InputError(f"{e} in {where}")


def vector_to_json(vector: FreeVector) -> List[List[Any]]:
    return [[to_json_label(label), format_scalar(c)] for label, c in vector.items()]


def _table(entries: Any, arity: int, where: str) -> Dict[Any, FreeVector]:
    """[[key₁, …, key_arity, vector], …] as a dict keyed by labels (or label pairs)."""
    if not isinstance(entries, list):
        raise InputError(f"{where} must be a list")
    table = {}
    for k, entry in enumerate(entries):
        if not isinstance(entry, list) or len(entry) != arity + 1:
            raise InputError(f"Entry {k} of {where} must have {arity} keys and a vector")
        keys = tuple(from_json_label(x) for x in entry[:arity])
        table[keys[0] if arity == 1 else keys] = parse_vector(entry[arity], f"{where}[{k}]")
    return table


def _total(table: Mapping[Label, FreeVector], labels: List[Label], where: str) -> None:
    for label in labels:
        if label not in table:
            raise InputError(f"{where} is not total: missing {label!r}")


# -- algebras ----------------------------------------------------------------

def parse_algebra(document: Any, where: str, max_dim: int = DEFAULT_MAX_DIM) -> StructureConstantAlgebra:
    """
    "Q", {"truncated_polynomial": {...}}, {"cyclic_group": n} or explicit structure
    constants {"labels", "unit", "products"}.
    """
    if document == 'Q':
        return scalar_algebra()
    if not isinstance(document, Mapping):
        raise InputError(f"{where} must be \"Q\" or an object")
    if 'truncated_polynomial' in document:
        spec = document['truncated_polynomial']
        return truncated_polynomial_algebra(_require(spec, 'variables', where),
                                            spec.get('nilpotency', 2), spec.get('name'))
    if 'cyclic_group' in document:
        return cyclic_group_algebra(int(document['cyclic_group']))
    labels = [from_json_label(x) for x in _require(document, 'labels', where)]
    unit_value = _require(document, 'unit', where)
    if isinstance(unit_value, Mapping):
        unit = parse_vector(_require(unit_value, "vector", f"{where}.unit"), f"{where}.unit")
    else:
        unit = FreeVector.basis(from_json_label(unit_value))
    products = _table(document.get('products', []), 2, f"{where}.products")
    return StructureConstantAlgebra(document.get('name', where), labels, products, unit,
                                    commutative=document.get('commutative'), max_dim=max_dim)


def parse_lie(document: Any, base: StructureConstantAlgebra, where: str) -> LieRinehartAlgebra:
    """{"preset": …} or {"generators", "brackets", "anchors", "character"}."""
    preset = document.get('preset') if isinstance(document, Mapping) else None
    if preset == 'heisenberg':
        return heisenberg_lie_rinehart()
    if preset == 'abelian':
        return abelian_lie_rinehart(int(document.get('rank', 2)))
    if preset == 'dual_numbers':
        return dual_numbers_lie_rinehart()
    if preset is not None:
        raise InputError(f"Unknown Lie-Rinehart preset {preset!r} in {where}")
    generators = _require(document, 'generators', where)
    brackets = {(int(i), int(j)): v for (i, j), v in
                _table(document.get('brackets', []), 2, f"{where}.brackets").items()}
    anchors = {(int(i), a): v for (i, a), v in
               _table(document.get('anchors', []), 2, f"{where}.anchors").items()}
    character = None
    if document.get('character') is not None:
        character = {int(i): v for i, v in _table(document['character'], 1, f"{where}.character").items()}
    return LieRinehartAlgebra(base, generators, brackets, anchors, character,
                              name=document.get('name', 'L'))


# -- instances ----------------------------------------------------------------

class Instance:
    """A parsed instance file with lazily built coefficient modules, operads and calculi."""

    def __init__(self, name: str, bialgebroid: LeftBialgebroid,
                 coefficients: List[Dict[str, Any]], poisson: List[Dict[str, Any]],
                 lie: Optional[LieRinehartAlgebra] = None, path: Optional[str] = None):
        self.name = name
        self.bialgebroid = bialgebroid
        self.lie = lie
        self.path = path
        self.coefficient_specs = {spec['name']: spec for spec in coefficients}
        self.poisson_specs = {spec['name']: spec for spec in poisson}
        self._modules: Dict[str, CoefficientModule] = {}
        self._hom: Dict[str, HomOperad] = {}
        self._cotor: Dict[str, CotorOperad] = {}
        self._calculi: Dict[str, Calculus] = {}

    def __repr__(self) -> str:
        return f"Instance({self.name!r})"

    @property
    def default_coefficient(self) -> str:
        if 'A' in self.coefficient_specs:
            return 'A'
        if self.coefficient_specs:
            return next(iter(self.coefficient_specs))
        raise InputError(f"Instance {self.name} declares no coefficient modules")

    def coefficient(self, name: Optional[str] = None) -> CoefficientModule:
        name = name or self.default_coefficient
        if name not in self._modules:
            if name not in self.coefficient_specs:
                raise InputError(f"Unknown coefficient module {name!r}; declared: "
                                 f"{', '.join(sorted(self.coefficient_specs))}")
            self._modules[name] = build_coefficient(self.bialgebroid, self.coefficient_specs[name],
                                                    self.coefficient)
        return self._modules[name]

    def hom_operad(self, name: Optional[str] = None, strict: bool = True) -> HomOperad:
        name = name or self.default_coefficient
        if name not in self._hom:
            self._hom[name] = HomOperad(self.bialgebroid, self.coefficient(name), strict=strict)
        return self._hom[name]

    def cotor_operad(self, name: Optional[str] = None, strict: bool = True) -> CotorOperad:
        name = name or self.default_coefficient
        if name not in self._cotor:
            self._cotor[name] = CotorOperad(self.bialgebroid, self.coefficient(name), strict=strict)
        return self._cotor[name]

    def calculus(self, name: Optional[str] = None) -> Calculus:
        """The calculus on C_•(U, M) driven by the Hom operad with values in the same M = A."""
        name = name or self.default_coefficient
        if name not in self._calculi:
            self._calculi[name] = Calculus(self.coefficient(name), self.hom_operad(name))
        return self._calculi[name]

    def poisson_names(self) -> List[str]:
        return ['mu'] + [n for n in self.poisson_specs if n != 'mu']

    def poisson_cochain(self, name: str, operad: HomOperad) -> FreeVector:
        if name == 'mu' and name not in self.poisson_specs:
            return operad.mu
        if name not in self.poisson_specs:
            raise InputError(f"Unknown Poisson structure {name!r}; declared: {', '.join(self.poisson_names())}")
        return build_poisson_cochain(operad, self.poisson_specs[name])

    def poisson(self, name: str, coefficient: Optional[str] = None) -> PoissonStructure:
        calculus = self.calculus(coefficient)
        return PoissonStructure(calculus, self.poisson_cochain(name, calculus.operad), name=name)


def build_coefficient(bialgebroid: LeftBialgebroid, spec: Mapping[str, Any],
                      resolve: Optional[Callable[[str], CoefficientModule]] = None) -> CoefficientModule:
    """
    Coefficient descriptors: base (with an optional right action), trivial, adjoint,
    twisted_base, left_regular, explicit tables, or induced from two declared modules.

    ``resolve`` looks up other declared modules by name for the induced kind.
    """
    name = spec['name']
    kind = spec.get('kind', 'base')
    where = f"coefficient {name!r}"
    if kind == 'base':
        action = spec.get('right_action')
        right: Optional[Callable] = None
        if action == 'enveloping':
            right = enveloping_right_action(bialgebroid)
        elif action == 'counit':
            right = counit_right_action(bialgebroid)
        elif action == 'lie_rinehart':
            right = lie_rinehart_right_action(_hopf(bialgebroid, where))
        elif isinstance(action, list):
            table = _table(action, 2, f"{where}.right_action")
            right = _lookup2(table)
        elif action is not None:
            raise InputError(f"Unknown right action {action!r} in {where}")
        return base_module(bialgebroid, right_action=right, name=name)
    if kind == 'trivial':
        return trivial_module(_hopf(bialgebroid, where), name=name)
    if kind == 'adjoint':
        return adjoint_module(_hopf(bialgebroid, where), name=name)
    if kind == 'twisted_base':
        return twisted_base_module(bialgebroid, from_json_label(_require(spec, 'sigma', where)), name=name)
    if kind == 'left_regular':
        return left_regular_module(bialgebroid, name=name)
    if kind == 'induced':
        sources = [_require(spec, key, where) for key in ('from', 'character_from')]
        if name in sources or resolve is None:
            raise InputError(f"{where} must be induced from other declared modules")
        module, base = (resolve(source) for source in sources)
        return induced_right_action(module, base, name=name)
    if kind == 'explicit':
        labels = [from_json_label(x) for x in _require(spec, 'labels', where)]
        left = _lookup2(_table(spec['left_action'], 2, f"{where}.left_action")) if 'left_action' in spec else None
        right = _lookup2(_table(spec['right_action'], 2, f"{where}.right_action")) if 'right_action' in spec else None
        coaction = None
        if 'coaction' in spec:
            values = _table(spec['coaction'], 1, f"{where}.coaction")
            _total(values, labels, f"{where}.coaction")
            coaction = values.__getitem__
        product = _lookup2(_table(spec['product'], 2, f"{where}.product")) if 'product' in spec else None
        unit = parse_vector(spec['unit'], f"{where}.unit") if 'unit' in spec else None
        return CoefficientModule(name, bialgebroid, labels, left_action=left, right_action=right,
                                 coaction=coaction, product=product, unit=unit)
    raise InputError(f"Unknown coefficient kind {kind!r} in {where}")


def _lookup2(table: Mapping[Tuple, FreeVector]) -> Callable[[Label, Label], FreeVector]:
    def action(x, y):
        return table.get((x, y), FreeVector.zero())
    return action


def _hopf(bialgebroid: LeftBialgebroid, where: str) -> LeftHopfAlgebroid:
    if not isinstance(bialgebroid, LeftHopfAlgebroid):
        raise PreconditionError(f"{where} needs a left Hopf algebroid")
    return bialgebroid


def build_poisson_cochain(operad: HomOperad, spec: Mapping[str, Any]) -> FreeVector:
    """
    Poisson descriptors: multiplication (μ), euler (the bivector x∂_x ∧ y∂_y on a truncated
    polynomial base of Aᵉ), hochschild (a table of π̃ on pairs of base labels) or
    cochain (explicit terms over (W-tuple, value label)).
    """
    kind = spec.get('kind', 'cochain')
    where = f"poisson {spec.get('name')!r}"
    if kind == 'multiplication':
        return operad.mu
    if kind == 'euler':
        first, second = spec.get('variables', ['x', 'y'])
        return euler_poisson_cochain(operad, first, second)
    if kind == 'hochschild':
        table = _table(_require(spec, 'values', where), 2, f"{where}.values")
        return hochschild_cochain(operad, 2, lambda labels: table.get(tuple(labels), FreeVector.zero()))
    if kind == 'cochain':
        return parse_vector(_require(spec, 'terms', where), f"{where}.terms")
    raise InputError(f"Unknown Poisson kind {kind!r} in {where}")


def build_instance(document: Mapping[str, Any], path: Optional[str] = None,
                   max_dim: int = DEFAULT_MAX_DIM) -> Instance:
    """
    Build an instance from a parsed document.

    Raises:
        InputError: For schema violations
        StructureError: When declared tables violate the algebra axioms
    """
    if not isinstance(document, Mapping):
        raise InputError("Instance document must be a JSON object", path=path)
    kind = document.get('kind', 'explicit')
    if kind not in KINDS:
        raise InputError(f"Unknown instance kind {kind!r}; expected one of {', '.join(KINDS)}", path=path)
    name = document.get('name') or (os.path.splitext(os.path.basename(path))[0] if path else 'instance')
    base = parse_algebra(document.get('base', 'Q'), 'base', max_dim)
    lie = None

    if kind == 'enveloping':
        bialgebroid = build_ae(base)
    elif kind == 'group':
        bialgebroid = build_group(parse_algebra(_require(document, 'carrier', 'instance'), 'carrier', max_dim))
    elif kind == 'hopf_algebra':
        algebra = parse_algebra(_require(document, 'carrier', 'instance'), 'carrier', max_dim)
        coproduct = _table(_require(document, 'coproduct', 'instance'), 1, 'coproduct')
        counit = _table(_require(document, "counit", "instance"), 1, "counit")
        antipode = _table(_require(document, 'antipode', 'instance'), 1, 'antipode')
        bialgebroid = build_hopf(algebra, coproduct, counit, antipode, name=name)
    elif kind == 'lie_rinehart':
        lie = parse_lie(_require(document, 'lie', 'instance'), base, 'lie')
        bialgebroid = build_vl(lie)
    else:
        carrier = parse_algebra(_require(document, 'carrier', 'instance'), 'carrier', max_dim)
        tables = {}
        for key, labels in (('source', base.basis()), ('target', base.basis()),
                            ('coproduct', carrier.basis()), ('counit', carrier.basis())):
            tables[key] = _table(_require(document, key, 'instance'), 1, key)
            _total(tables[key], labels, key)
        args = (name, carrier, base,
                LazyTable.from_mapping(tables['source'], 'source'),
                LazyTable.from_mapping(tables['target'], 'target'),
                LazyTable.from_mapping(tables['coproduct'], 'coproduct'),
                LazyTable.from_mapping(tables['counit'], 'counit'))
        if 'translation' in document:
            translation = _table(document['translation'], 1, 'translation')
            _total(translation, carrier.basis(), 'translation')
            bialgebroid = LeftHopfAlgebroid(*args, LazyTable.from_mapping(translation, 'translation'))
        else:
            bialgebroid = LeftBialgebroid(*args)

    coefficients = document.get('coefficients', [{'name': 'A', 'kind': 'base'}])
    poisson = document.get('poisson', [])
    for group, items in (('coefficients', coefficients), ('poisson', poisson)):
        if not isinstance(items, list) or not all(isinstance(i, Mapping) and 'name' in i for i in items):
            raise InputError(f"'{group}' must be a list of objects with a 'name'", path=path)
    logger.info(f"Loaded instance {name}: {bialgebroid.name} ({kind})")
    return Instance(name, bialgebroid, coefficients, poisson, lie=lie, path=path)


def read_json(path: str) -> Any:
    """
    Parse a JSON file, reporting syntax errors with their line and column.

    Raises:
        InputError: For unreadable files or invalid JSON
    """
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return json.load(f)
    except FileNotFoundError:
        raise InputError("File not found", path=path)
    except json.JSONDecodeError as e:
        raise InputError(f"Invalid JSON: {e.msg}", line=e.lineno, column=e.colno, path=path)


def load_instance(path: str, config: Optional[Dict[str, Any]] = None) -> Instance:
    config = config or {}
    max_dim = config.get('algebra', {}).get('max_validation_dim', DEFAULT_MAX_DIM)
    document = read_json(path)
    try:
        return build_instance(document, path=path, max_dim=max_dim)
    except InputError as e:
        if e.path is None:
            e.path = path
            e.args = (f"{e.args[0]} ({path})",) + e.args[1:]
        raise


# -- operands -------------------------------------------------------------------

def load_operand(path: str) -> Tuple[str, int, FreeVector]:
    """
    {"kind": "chain"|"cochain"|"cotor", "degree": n, "terms": [[label, coefficient], …]}

    Returns:
        tuple: (kind, degree, vector)
    """
    document = read_json(path)
    kind = _require(document, 'kind', path)
    if kind not in OPERAND_KINDS:
        raise InputError(f"Operand kind must be one of {', '.join(OPERAND_KINDS)}", path=path)
    degree = _require(document, 'degree', path)
    if not isinstance(degree, int) or degree < 0:
        raise InputError(f"Operand degree must be a non-negative integer, got {degree!r}", path=path)
    vector = parse_vector(_require(document, 'terms', path), 'terms')
    _check_shape(kind, degree, vector, path)
    return kind, degree, vector


def _check_shape(kind: str, degree: int, vector: FreeVector, path: str) -> None:
    for label in vector.support():
        if kind == 'cochain':
            ok = isinstance(label, tuple) and len(label) == 2 and isinstance(label[0], tuple) \
                and len(label[0]) == degree
        else:
            ok = isinstance(label, tuple) and len(label) == degree + 1
        if not ok:
            raise InputError(f"Label {label!r} does not fit a {kind} of degree {degree}", path=path)


def operand_document(kind: str, degree: int, vector: FreeVector) -> Dict[str, Any]:
    return {'kind': kind, 'degree': degree, 'terms': vector_to_json(vector)}

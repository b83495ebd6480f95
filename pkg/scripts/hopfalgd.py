#!/usr/bin/env python3
"""
hopfalgd Command-Line Interface

Validates bialgebroid instances, prints homology tables, evaluates operators on
(co)chains and runs the identity suites, writing JSON and markdown reports.
"""

import os
import sys
import json
import argparse
import logging
from typing import Any, Callable, Dict, List, Optional, Tuple

# Load environment variables from .env file
from dotenv import load_dotenv
load_dotenv()

# Add src directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from rich.console import Console
from rich.table import Table

from complexes import ChainComplex, CotorComplex, HomComplex
from exceptions import HopfAlgebroidError, InputError, PreconditionError
from homology import ConnesBicomplex, MixedTotalComplex, homology_table
from instances import Instance, load_instance, load_operand, operand_document
from linalg import FreeVector
from poisson import shuffle
from reports import PASS, CheckResult, Report, ReportWriter, run_check
from suites import SUITES, SuiteRunner
from utils import default_config, load_config, max_basis_size, setup_logging

logger = logging.getLogger(__name__)

console = Console()

COMPLEXES = ('chain', 'hom', 'cotor', 'mixed', 'connes')
OPERATIONS = ('cup', 'bracket', 'cap', 'lie', 'b', 'B', 'delta', 'beta', 'btau', 'shuffle', 'koszul')

Operand = Tuple[str, int, FreeVector]


def resolve_config(path: Optional[str]) -> Dict[str, Any]:
    """
    Configuration from --config, then HOPFALGD_CONFIG, then config/default.yaml when present.
    """
    path = path or os.environ.get('HOPFALGD_CONFIG')
    if path is None:
        bundled = os.path.join(os.path.dirname(__file__), '..', 'config', 'default.yaml')
        path = bundled if os.path.exists(bundled) else None
    if path is None:
        return default_config()
    return load_config(path)


# -- report output ----------------------------------------------------------------

def print_report(report: Report) -> None:
    totals = report.totals()
    table = Table(title=f"{report.title}: {report.instance}")
    table.add_column("check")
    table.add_column("status")
    table.add_column("witness / detail", overflow="fold")
    for check in report.sorted_checks():
        if check.passed:
            continue
        table.add_row(check.id, check.status, check.witness or check.detail or '')
    if table.row_count:
        console.print(table)
    style = "green" if report.ok else "red"
    console.print(f"[{style}]{totals['pass']} passed, {totals['fail']} failed, "
                  f"{totals['skipped']} skipped[/{style}]")


def emit(report: Report, config: Dict[str, Any], stem: str, output_dir: Optional[str]) -> int:
    if output_dir:
        config.setdefault('reports', {})['output_dir'] = output_dir
    ReportWriter(config).write(report, stem)
    print_report(report)
    return 0 if report.ok else 1


# -- commands ---------------------------------------------------------------------

def cmd_validate(instance: Instance, args, config: Dict[str, Any]) -> Report:
    return SuiteRunner(instance, config, args.seed).validate()


def homology_view(instance: Instance, args):
    """The complex named by --complex, with the Poisson differential when --poisson is given."""
    B = instance.bialgebroid
    module = instance.coefficient(args.coefficient)
    if args.poisson:
        poisson = instance.poisson(args.poisson, args.coefficient)
        if args.complex == 'chain':
            return poisson.chain_view(normalized=args.normalized)
        if args.complex == 'hom':
            return poisson.cochain_view()
        if args.complex == 'mixed':
            return poisson.mixed_total()
        raise PreconditionError(f"--poisson does not apply to --complex {args.complex}")
    if args.complex == 'chain':
        return ChainComplex(B, module, normalized=args.normalized)
    if args.complex == 'hom':
        return HomComplex(B, module, normalized=args.normalized)
    if args.complex == 'cotor':
        return CotorComplex(B, module, normalized=args.normalized, weight=args.weight)
    if args.complex == 'mixed':
        normalized = ChainComplex(B, module, normalized=True)
        return MixedTotalComplex(normalized, normalized.B)
    return ConnesBicomplex(ChainComplex(B, module, normalized=False))


def cmd_homology(instance: Instance, args, config: Dict[str, Any]) -> Report:
    max_degree = args.max_degree
    if max_degree is None:
        max_degree = int(config.get('homology', {}).get('max_degree', 4))
    view = homology_view(instance, args)
    result = homology_table(view, max_degree, max_basis_size(config))

    table = Table(title=result.name)
    table.add_column("degree", justify="right")
    table.add_column("dimension", justify="right")
    table.add_column("chain dimension", justify="right")
    for n in range(max_degree + 1):
        table.add_row(str(n), str(result.dimensions[n]), str(result.chain_dimensions[n]))
    console.print(table)

    report = Report('homology', instance.name, tables={'homology': result.to_dict()},
                    metadata={'complex': args.complex, 'poisson': args.poisson,
                              'coefficient': args.coefficient or instance.default_coefficient,
                              'normalized': args.normalized, 'weight': args.weight})
    report.add(CheckResult(f'homology.{args.complex}', 'd∘d = 0 and rank-nullity', PASS))
    return report


def _expect(operands: List[Operand], kinds: Tuple[str, ...], op: str) -> None:
    if len(operands) != len(kinds):
        raise InputError(f"--op {op} takes {len(kinds)} operand(s), got {len(operands)}")
    for (kind, _, _), expected in zip(operands, kinds):
        if kind != expected:
            raise InputError(f"--op {op} expects operands of kinds {', '.join(kinds)}")


def evaluate(instance: Instance, op: str, operands: List[Operand],
             coefficient: Optional[str] = None, poisson_name: Optional[str] = None) -> Operand:
    """
    Apply one operation to parsed operands.

    Returns:
        tuple: (kind, degree, vector) of the result

    Raises:
        InputError: For operand kinds or counts the operation does not accept
        PreconditionError: When the instance does not support the operation
    """
    kinds = tuple(kind for kind, _, _ in operands)

    def poisson():
        if not poisson_name:
            raise InputError(f"--op {op} needs --poisson")
        return instance.poisson(poisson_name, coefficient)

    if op in ('cup', 'bracket'):
        if kinds not in (('cochain', 'cochain'), ('cotor', 'cotor')):
            raise InputError(f"--op {op} expects two cochain or two cotor operands")
        operad = instance.hom_operad(coefficient) if kinds[0] == 'cochain' else instance.cotor_operad(coefficient)
        (kind, p, x), (_, q, y) = operands
        if op == 'cup':
            return kind, p + q, operad.cup(p, x, q, y)
        if p + q < 1:
            raise PreconditionError("The bracket of two degree-0 cochains has degree −1")
        return kind, p + q - 1, operad.bracket(p, x, q, y)

    if op in ('cap', 'lie'):
        _expect(operands, ('cochain', 'chain'), op)
        calculus = instance.calculus(coefficient)
        (_, p, phi), (_, n, c) = operands
        if op == 'cap':
            if p > n:
                return 'chain', 0, FreeVector.zero()
            return 'chain', n - p, calculus.cap(p, phi, n, c)
        if n - p + 1 < 0:
            return 'chain', 0, FreeVector.zero()
        return 'chain', n - p + 1, calculus.lie_derivative(p, phi, n, c)

    if op == 'b':
        _expect(operands, ('chain',), op)
        (_, n, c), = operands
        chains = ChainComplex(instance.bialgebroid, instance.coefficient(coefficient), normalized=False)
        return 'chain', max(n - 1, 0), chains.b(n, c) if n else FreeVector.zero()

    if op == 'B':
        if kinds == ('chain',):
            (_, n, c), = operands
            chains = ChainComplex(instance.bialgebroid, instance.coefficient(coefficient), normalized=True)
            return 'chain', n + 1, chains.B(n, c)
        _expect(operands, ('cotor',), op)
        (_, n, z), = operands
        cotor = CotorComplex(instance.bialgebroid, instance.coefficient(coefficient), normalized=True)
        return 'cotor', max(n - 1, 0), cotor.B(n, z)

    if op == 'delta':
        _expect(operands, ('cochain',), op)
        (_, p, phi), = operands
        return 'cochain', p + 1, instance.hom_operad(coefficient).complex.delta(p, phi)

    if op == 'beta':
        _expect(operands, ('cotor',), op)
        (_, n, z), = operands
        return 'cotor', n + 1, instance.cotor_operad(coefficient).complex.beta(n, z)

    if op == 'btau':
        structure = poisson()
        if kinds == ('chain',):
            (_, n, c), = operands
            return 'chain', max(n - 1, 0), structure.b_tau(n, c)
        _expect(operands, ('cochain',), op)
        (_, p, phi), = operands
        return 'cochain', p + 1, structure.beta_tau(p, phi)

    if op in ('shuffle', 'koszul'):
        _expect(operands, ('chain', 'chain'), op)
        (_, p, x), (_, q, y) = operands
        if op == 'shuffle':
            return 'chain', p + q, shuffle(instance.calculus(coefficient), p, x, q, y)
        if p + q < 1:
            return 'chain', 0, FreeVector.zero()
        return 'chain', p + q - 1, poisson().koszul_bracket(p, x, q, y)

    raise InputError(f"Unknown operation {op!r}")


def boundary_view(instance: Instance, kind: str, coefficient: Optional[str]):
    B = instance.bialgebroid
    module = instance.coefficient(coefficient)
    if kind == 'chain':
        return ChainComplex(B, module, normalized=False)
    if kind == 'cochain':
        return HomComplex(B, module, normalized=False)
    return CotorComplex(B, module, normalized=False)


def cmd_eval(instance: Instance, args, config: Dict[str, Any]) -> Report:
    operands = [load_operand(path) for path in args.operand]
    kind, degree, result = evaluate(instance, args.op, operands, args.coefficient, args.poisson)
    document = operand_document(kind, degree, result)
    print(json.dumps(document, sort_keys=True, ensure_ascii=False))

    report = Report('eval', instance.name, tables={'result': document},
                    metadata={'op': args.op, 'operands': list(args.operand), 'poisson': args.poisson})
    if args.assert_boundary:
        view = boundary_view(instance, kind, args.coefficient)

        def body():
            table = homology_table(view, degree, max_basis_size(config))
            if not table.is_boundary(degree, result):
                return f"{kind} of degree {degree} is not a boundary"
            return None
        report.add(run_check('eval.boundary', 'result ∈ im d', body))
    return report


def cmd_suite(instance: Instance, args, config: Dict[str, Any]) -> Report:
    runner = SuiteRunner(instance, config, args.seed)
    if args.suite == 'all':
        return runner.run_all()
    return runner.run(args.suite)


COMMANDS: Dict[str, Callable[[Instance, Any, Dict[str, Any]], Report]] = {
    'validate': cmd_validate,
    'homology': cmd_homology,
    'eval': cmd_eval,
    'suite': cmd_suite,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="hopfalgd: exact computations with bialgebroids and Hopf algebroids",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Check every axiom of a bundled instance
  python scripts/hopfalgd.py validate fixtures/ae_dual_numbers.json

  # Hochschild homology with coefficients in A
  python scripts/hopfalgd.py homology fixtures/ae_dual_numbers.json --complex chain --max-degree 4

  # Cyclic homology through the Poisson structure μ
  python scripts/hopfalgd.py homology fixtures/ae_dual_numbers.json --complex mixed --poisson mu

  # Koszul bracket of two chains, asserting the result is a boundary
  python scripts/hopfalgd.py eval fixtures/truncated_polynomial.json --op koszul \\
      --operand x.json --operand y.json --poisson mu --assert-boundary

  # Identity suites
  python scripts/hopfalgd.py suite fixtures/c2_group_algebra.json --suite cyclic
        """
    )
    parser.add_argument('--config', '-c', help='Configuration file path (default: config/default.yaml)')
    parser.add_argument('--verbose', '-v', action='store_true', help='Enable verbose logging')

    subparsers = parser.add_subparsers(dest='command', required=True)

    def instance_parser(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument('instance', help='Instance JSON file')
        sub.add_argument('--output-dir', '-o', help='Report directory (default: reports.output_dir)')
        sub.add_argument('--coefficient', help='Coefficient module name (default: A or the first declared)')
        sub.add_argument('--seed', type=int, default=None, help='Seed for sampled checks (default: cli.seed)')
        return sub

    instance_parser('validate', 'Check bialgebroid, Hopf, module and operad axioms')

    homology = instance_parser('homology', 'Dimensions and representatives of a complex')
    homology.add_argument('--complex', choices=COMPLEXES, default='chain')
    homology.add_argument('--max-degree', type=int, help='Highest degree (default: homology.max_degree)')
    homology.add_argument('--poisson', help='Use the differential of this Poisson structure')
    homology.add_argument('--weight', type=int, help='Monomial weight for cotor cochains of PBW carriers')
    group = homology.add_mutually_exclusive_group()
    group.add_argument('--normalized', dest='normalized', action='store_true', default=True)
    group.add_argument('--unnormalized', dest='normalized', action='store_false')

    evaluation = instance_parser('eval', 'Apply an operator to (co)chain operand files')
    evaluation.add_argument('--op', choices=OPERATIONS, required=True)
    evaluation.add_argument('--operand', action='append', default=[], help='Operand JSON file (repeatable)')
    evaluation.add_argument('--poisson', help='Poisson structure for btau and koszul')
    evaluation.add_argument('--assert-boundary', action='store_true',
                            help='Exit 1 unless the result is a boundary')

    suite = instance_parser('suite', 'Run an identity suite')
    suite.add_argument('--suite', choices=SUITES + ('all',), required=True)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point; returns the process exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        config = resolve_config(args.config)
    except FileNotFoundError as e:
        console.print(f"❌ {e}")
        return 2
    except Exception as e:
        console.print(f"❌ Invalid configuration: {e}")
        return 2

    if args.verbose:
        config.setdefault('logging', {})['level'] = 'DEBUG'
    setup_logging(config)
    if args.seed is None:
        args.seed = int(config.get('cli', {}).get('seed', 0))

    try:
        instance = load_instance(args.instance, config)
        report = COMMANDS[args.command](instance, args, config)
        stem = f"{instance.name}-{args.command}"
        if args.command == 'suite':
            stem = f"{stem}-{args.suite}"
        return emit(report, config, stem, args.output_dir)
    except HopfAlgebroidError as e:
        console.print(f"❌ {e}")
        return e.exit_code
    except KeyboardInterrupt:
        console.print("\n⏹️  Interrupted by user")
        return 1
    except Exception as e:
        console.print(f"\n❌ hopfalgd failed: {str(e)}")
        if args.verbose:
            import traceback
            traceback.print_exc()
        return 1


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""
Demo Script for hopfalgd

Validates every bundled fixture and prints a few homology tables.
"""

import os
import sys
import time
import argparse
import logging
from pathlib import Path

# Add src directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from complexes import ChainComplex, HomComplex
from exceptions import HopfAlgebroidError
from homology import homology_table
from instances import load_instance
from suites import SuiteRunner
from utils import format_duration, validate_dependencies

FIXTURES = Path(__file__).resolve().parent.parent / 'fixtures'

DEMO_CONFIG = {
    'suites': {'max_arity': 1, 'max_degree': 2, 'samples': 8, 'workers': 1},
    'algebra': {'pbw_validation_degree': 2},
}


def print_banner():
    """Print demo banner."""
    banner = """
    ╔══════════════════════════════════════════════════════════════╗
    ║                        hopfalgd demo                         ║
    ║                                                              ║
    ║  Exact checks and homology for bialgebroids over ℚ           ║
    ╚══════════════════════════════════════════════════════════════╝
    """
    print(banner)


def check_prerequisites() -> bool:
    """Check if all prerequisites are met."""
    print("🔍 Checking Prerequisites...")
    print("=" * 50)

    all_good = True
    for dep, available in validate_dependencies().items():
        status = "✅ Available" if available else "❌ Missing"
        print(f"  {dep:15} {status}")
        all_good = all_good and available

    print("\n" + "=" * 50)
    if all_good:
        print("✅ All prerequisites met!")
    else:
        print("❌ Some prerequisites are missing.")
        print("\nTo install missing components:")
        print("  1. Run: ./scripts/setup_environment.sh")
        print("  2. Or: pip install -r requirements.txt")
    return all_good


def validate_fixtures() -> bool:
    """Run the structural validation on every instance in fixtures/."""
    print("\n🧮 Validating bundled instances")
    print("=" * 50)

    ok = True
    for path in sorted(FIXTURES.glob('*.json')):
        start = time.time()
        try:
            instance = load_instance(str(path))
            report = SuiteRunner(instance, DEMO_CONFIG).validate()
        except HopfAlgebroidError as e:
            print(f"  ❌ {path.name}: {e}")
            ok = False
            continue
        totals = report.totals()
        expected_failure = 'corrupted' in path.stem
        status = "✅" if report.ok != expected_failure else "❌"
        ok = ok and status == "✅"
        note = " (expected to fail)" if expected_failure else ""
        print(f"  {status} {path.stem:28} {totals['pass']:3} passed, {totals['fail']:2} failed, "
              f"{totals['skipped']:2} skipped in {format_duration(time.time() - start)}{note}")
    return ok


def show_homology():
    """Hochschild homology of the dual numbers and group cohomology of C₂."""
    print("\n📐 Homology tables")
    print("=" * 50)

    ae = load_instance(str(FIXTURES / 'ae_dual_numbers.json'))
    chains = ChainComplex(ae.bialgebroid, ae.coefficient('A'))
    print(f"  HH_•(ℚ[x]/(x²))          {homology_table(chains, max_degree=4).table()}")

    c2 = load_instance(str(FIXTURES / 'c2_group_algebra.json'))
    cochains = HomComplex(c2.bialgebroid, c2.coefficient('k'))
    print(f"  H^•(C₂, ℚ)               {homology_table(cochains, max_degree=3).table()}")


def main():
    """Main demo function."""
    parser = argparse.ArgumentParser(
        description="hopfalgd demo",
        formatter_class=argparse.RawDescriptionHelpFormatter
    )
    parser.add_argument(
        '--check-only',
        action='store_true',
        help='Only check prerequisites'
    )
    args = parser.parse_args()

    logging.basicConfig(level=logging.WARNING)
    print_banner()

    if not check_prerequisites():
        if not args.check_only:
            print("\n⚠️  Prerequisites not met. Please run setup first.")
        return 1
    if args.check_only:
        return 0

    ok = validate_fixtures()
    show_homology()

    print("\n🎉 Demo Complete!" if ok else "\n❌ Demo finished with unexpected results")
    print("\nNext steps:")
    print("  python scripts/hopfalgd.py validate fixtures/heisenberg.json")
    print("  python scripts/hopfalgd.py suite fixtures/truncated_polynomial.json --suite poisson")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())

"""
hopfalgd

Exact computer algebra for bialgebroids and Hopf algebroids over ℚ: operads with
multiplication, the noncommutative calculus, Poisson structures and their homology.

Modules import each other by bare name; put this directory on ``sys.path``.
"""

__version__ = "1.0.0"

__all__ = [
    "linalg",
    "algebra",
    "tensor_space",
    "bialgebroid",
    "coefficients",
    "complexes",
    "operad",
    "calculus",
    "poisson",
    "classical",
    "homology",
    "instances",
    "suites",
    "reports",
    "exceptions",
    "utils",
]

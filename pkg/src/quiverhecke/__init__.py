"""Exact-arithmetic quiver Hecke algebras and their cyclotomic quotients.

The package constructs R(beta) from a symmetrizable Cartan datum, forms
cyclotomic quotients R^Lambda(beta), and machine-checks the structural
identities relating them (exact sequences of induction/restriction
bimodules, sl2 commutation, and graded dimension formulas against the
integrable highest weight module V(Lambda)).
"""

from .cartan import CartanDatum, Weight, build_cartan
from .checks import CHECKS, run_all, run_check
from .cyclotomic import CycAlgebra
from .klr import KLR, BasisMonomial, get_engine
from .laurent import LaurentPoly
from .qpolys import QSpec
from .uqmod import UqModule

__version__ = "0.1.0"

__all__ = [
    "BasisMonomial",
    "CHECKS",
    "CartanDatum",
    "CycAlgebra",
    "KLR",
    "LaurentPoly",
    "QSpec",
    "UqModule",
    "Weight",
    "build_cartan",
    "get_engine",
    "run_all",
    "run_check",
    "__version__",
]

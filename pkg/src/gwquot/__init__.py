"""Exact genus-0 Gromov-Witten invariants and GIT quotient comparisons.

The package computes, over exact rationals:

* cup products, pairings and expected dimensions in H*(P^N), H*(P^m x P^n)
  and H*(Gr(k, m))  (:mod:`gwquot.cohmodel`),
* classical and quantum Littlewood-Richardson coefficients and the
  degeneracy-locus degrees d(lambda)  (:mod:`gwquot.schubert`),
* genus-0 Gromov-Witten invariants with arbitrary insertions for projective
  spaces and their products, by memoized WDVV reconstruction, plus the
  3-point Grassmannian invariants  (:mod:`gwquot.gwengine`),
* both sides of the quotient comparison identity
  GW_{X//G}(a) = GW_X(pull(a) cup zeta, ...) for the torus and Grassmannian
  families, with full expected-dimension bookkeeping
  (:mod:`gwquot.quotientcmp`).

A command-line front end lives in :mod:`gwquot.cli` (``gwquot --help``).
"""

from .cohmodel import (
    BasisClass,
    ClassVector,
    CurveClass,
    Grassmannian,
    Product,
    Projective,
    RingModel,
    make_model,
)
from .errors import (
    GWQuotError,
    InternalCheckError,
    ParameterError,
    UnsupportedConfigurationError,
    UnsupportedModelError,
)
from .gwengine import MemoTable, gw0, gw0_grassmannian_3pt, wdvv_residual
from .quotientcmp import (
    ComparisonReport,
    DimensionLedger,
    GrassmannQuot,
    QuotientFamily,
    TorusPair,
    dimension_ledger,
    grassmann_k_formula,
    make_family,
    pullback_class,
    pushforward_class,
    verify_comparison,
)
from .schubert import (
    DegCoefficient,
    dlambda,
    lr_coeffs,
    lr_coeffs_tableau,
    pieri,
    quantum_3point,
    quantum_lr,
)

__version__ = "0.1.0"

__all__ = [
    "BasisClass", "ClassVector", "CurveClass", "ComparisonReport",
    "DegCoefficient", "DimensionLedger", "GWQuotError", "Grassmannian",
    "GrassmannQuot", "InternalCheckError", "MemoTable", "ParameterError",
    "Product", "Projective", "QuotientFamily", "RingModel", "TorusPair",
    "UnsupportedConfigurationError", "UnsupportedModelError",
    "dimension_ledger", "dlambda", "grassmann_k_formula", "gw0",
    "gw0_grassmannian_3pt", "lr_coeffs", "lr_coeffs_tableau", "make_family",
    "make_model", "pieri", "pullback_class", "pushforward_class",
    "quantum_3point", "quantum_lr", "verify_comparison", "wdvv_residual",
]

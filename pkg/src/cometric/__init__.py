"""Exact computational toolkit for symmetric association schemes.

Validates schemes, computes eigenmatrices and Krein parameters, detects
Q-polynomial structure, and measures spherical design strength of the
first-idempotent embedding by two independent routes.
"""

from ._kernel import BACKEND as KERNEL_BACKEND
from .catalan import (
    CatalanMatrix,
    Polynomial,
    WeightTriple,
    catalan_matrix,
    catalan_numbers,
    gegenbauer,
    monomial_in_gegenbauer,
    orthogonal_polys,
    recover_weights,
    sphere_catalan_closed_form,
    sphere_moments,
    sphere_weight_check,
)
from .derived import (
    DerivedDesign,
    derived_design,
    derived_moment,
    derived_predicates,
    derived_strength_by_moments,
    dual_intersection_identity,
    is_ppolynomial,
    pq_strength_bound_check,
)
from .designs import (
    Embedding,
    StrengthReport,
    embed,
    krein_moment_identity,
    moment,
    strength_by_krein,
    strength_by_moments,
)
from .exact import Rational, RationalMatrix, rat
from .generators import SchemeSpec, generate, load_relation_file, serialize
from .qpoly import QPolyOrdering, abc_sequences, find_qpoly_orderings
from .scheme import (
    KreinTensor,
    RelationPartition,
    SchemeCore,
    dual_eigen_consistency,
    intersection_numbers,
    krein_parameters,
    validate_scheme,
)

__version__ = "1.0.0"

__all__ = [
    "CatalanMatrix",
    "DerivedDesign",
    "Embedding",
    "KERNEL_BACKEND",
    "KreinTensor",
    "Polynomial",
    "QPolyOrdering",
    "Rational",
    "RationalMatrix",
    "RelationPartition",
    "SchemeCore",
    "SchemeSpec",
    "StrengthReport",
    "WeightTriple",
    "abc_sequences",
    "catalan_matrix",
    "catalan_numbers",
    "derived_design",
    "derived_moment",
    "derived_predicates",
    "derived_strength_by_moments",
    "dual_eigen_consistency",
    "dual_intersection_identity",
    "embed",
    "find_qpoly_orderings",
    "gegenbauer",
    "generate",
    "intersection_numbers",
    "is_ppolynomial",
    "krein_moment_identity",
    "krein_parameters",
    "load_relation_file",
    "moment",
    "monomial_in_gegenbauer",
    "orthogonal_polys",
    "pq_strength_bound_check",
    "rat",
    "recover_weights",
    "serialize",
    "sphere_catalan_closed_form",
    "sphere_moments",
    "sphere_weight_check",
    "strength_by_krein",
    "strength_by_moments",
    "validate_scheme",
]

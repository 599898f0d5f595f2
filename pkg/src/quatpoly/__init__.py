"""Polynomials over generalized quaternion algebras with rational scalars.

Exact arithmetic end to end: quaternions with Fraction components, a
noncommutative polynomial ring with central variable and left
coefficients, right division and GCRDs, Beck-style central/reduced
factorization, and root classification into central, isolated, and
spherical conjugacy classes.  A float64 backend mirrors the
classification with explicit tolerances, and the two sides can be
reconciled report against report.
"""

from .algebra import (
    HAMILTON,
    AlgebraParams,
    CentralClass,
    ConjClass,
    Quaternion,
    SphereClass,
    commutes,
    conjugacy_class,
    distinct_conjugates,
    in_subfield,
    is_rational_square,
    rational_sqrt,
    same_class,
)
from .decompose import (
    BeckFactorization,
    CenterCoords,
    SubfieldCoords,
    beck_decompose,
    center_coordinates,
    max_central_right_divisor,
    rational_roots,
    roots_in_center,
    subfield_coordinates,
    subfield_gcd,
    transverse_unit_for,
)
from .errors import (
    InvariantViolation,
    NumericFailure,
    ParseError,
    PreconditionError,
    QuatPolyError,
    ZeroDivisorError,
)
from .numeric import (
    AgreementReport,
    CentralClassF,
    NumericSettings,
    QuatF,
    SphereClassF,
    agree_with_exact,
    classify_f64,
    companion_roots_f64,
    eval_f64,
    roots_in_subfield_f64,
)
from .parsing import (
    PolyExpr,
    lower,
    parse_poly_text,
    parse_quaternion,
    parse_to_qpoly,
    poly_from_json_obj,
    poly_to_json_obj,
    quat_to_json,
)
from .polynomials import (
    CentralPoly,
    QPoly,
    central_gcd,
    eval_product,
    eval_right,
    gcrd,
    minimal_polynomial,
    right_divrem,
)
from .roots import (
    CommonSubfield,
    CubicAnalysis,
    IsolatedRoot,
    NoRootInClass,
    RootReport,
    SparseAnalysis,
    SphericalBoundReport,
    SphericalRoots,
    UncertainStatus,
    analyze_sparse,
    candidate_classes,
    class_remainder,
    class_status,
    classify,
    classify_cubic,
    common_subfield,
    conjugation_root_kernel,
    nonroot_conjugates,
    roots_in_subfield,
    spherical_bound_report,
    spherical_classes,
)

__version__ = "0.1.0"

__all__ = [
    "HAMILTON",
    "AlgebraParams",
    "Quaternion",
    "CentralClass",
    "SphereClass",
    "ConjClass",
    "conjugacy_class",
    "same_class",
    "commutes",
    "in_subfield",
    "distinct_conjugates",
    "is_rational_square",
    "rational_sqrt",
    "QPoly",
    "CentralPoly",
    "right_divrem",
    "gcrd",
    "central_gcd",
    "eval_right",
    "eval_product",
    "minimal_polynomial",
    "BeckFactorization",
    "CenterCoords",
    "SubfieldCoords",
    "beck_decompose",
    "center_coordinates",
    "max_central_right_divisor",
    "rational_roots",
    "roots_in_center",
    "subfield_coordinates",
    "subfield_gcd",
    "transverse_unit_for",
    "RootReport",
    "SphericalRoots",
    "IsolatedRoot",
    "NoRootInClass",
    "UncertainStatus",
    "classify",
    "class_status",
    "class_remainder",
    "candidate_classes",
    "spherical_classes",
    "SphericalBoundReport",
    "spherical_bound_report",
    "CommonSubfield",
    "common_subfield",
    "SparseAnalysis",
    "analyze_sparse",
    "CubicAnalysis",
    "classify_cubic",
    "roots_in_subfield",
    "conjugation_root_kernel",
    "nonroot_conjugates",
    "QuatF",
    "NumericSettings",
    "CentralClassF",
    "SphereClassF",
    "classify_f64",
    "companion_roots_f64",
    "eval_f64",
    "roots_in_subfield_f64",
    "AgreementReport",
    "agree_with_exact",
    "PolyExpr",
    "parse_poly_text",
    "parse_to_qpoly",
    "parse_quaternion",
    "lower",
    "poly_to_json_obj",
    "poly_from_json_obj",
    "quat_to_json",
    "QuatPolyError",
    "ParseError",
    "ZeroDivisorError",
    "PreconditionError",
    "NumericFailure",
    "InvariantViolation",
    "__version__",
]

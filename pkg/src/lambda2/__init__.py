"""Complementary traces of genus-2 double covers of elliptic curves.

For an elliptic curve E over F_q (odd characteristic at least 5) the package
computes the set of normalized L-functions of degree-2 covers C -> E with C of
genus 2, reported through the complementary trace: L_C = L_E * (1 - a'T + qT^2)
up to the functional equation.  Three independent routes are implemented and
cross-checked: a closed-form classification, an enumeration of 2-torsion
Galois-module gluing data, and a brute-force function-field search.
"""

__version__ = "0.1.0"

from .ffield import (
    FieldElement,
    FiniteField,
    IncompatibleFields,
    NotASquare,
    Polynomial,
    ZeroPolynomial,
    embedding,
    factor,
    field_of_order,
    is_square,
    make_field,
    roots,
    sqrt,
)
from .ecurve import (
    BadCharacteristic,
    EllipticCurve,
    FieldTooLarge,
    PointNotOnCurve,
    SingularCurve,
    curve_inventory,
    enumerate_curves,
    make_curve,
)
from .galois2 import (
    TwoTorsionModule,
    kani_admissible,
    module_isomorphisms,
    two_torsion_module,
)
from .classify import (
    AdmissibleSet,
    DegreeNotCoprime,
    LambdaSet,
    NotAdmissible,
    OutOfHasseWindow,
    admissible_traces,
    hasse_window,
    lambda_exact,
    lambda_formula,
    lambda_formula_resolved,
    lambda_set,
    ramification_solutions,
    weil_poly,
)
from .fforacle import (
    DivisorSketch,
    EllipticFunction,
    NotGenusTwo,
    PlaceOnE,
    ZeroFunction,
    ZetaInconsistent,
    branch_degree,
    cover_census,
    cover_complementary_trace,
    cover_point_count,
    cover_representatives,
    divisor_odd_part,
    lambda_oracle,
    local_valuation,
    norm_polynomial,
    places_above,
    rr_basis,
)

__all__ = [
    "AdmissibleSet",
    "BadCharacteristic",
    "DegreeNotCoprime",
    "DivisorSketch",
    "EllipticCurve",
    "EllipticFunction",
    "FieldElement",
    "FieldTooLarge",
    "FiniteField",
    "IncompatibleFields",
    "LambdaSet",
    "NotASquare",
    "NotAdmissible",
    "NotGenusTwo",
    "OutOfHasseWindow",
    "PlaceOnE",
    "PointNotOnCurve",
    "Polynomial",
    "SingularCurve",
    "TwoTorsionModule",
    "ZeroFunction",
    "ZeroPolynomial",
    "ZetaInconsistent",
    "admissible_traces",
    "branch_degree",
    "cover_census",
    "cover_complementary_trace",
    "cover_point_count",
    "cover_representatives",
    "curve_inventory",
    "divisor_odd_part",
    "embedding",
    "enumerate_curves",
    "factor",
    "field_of_order",
    "hasse_window",
    "is_square",
    "kani_admissible",
    "lambda_exact",
    "lambda_formula",
    "lambda_formula_resolved",
    "lambda_oracle",
    "lambda_set",
    "local_valuation",
    "make_curve",
    "make_field",
    "module_isomorphisms",
    "norm_polynomial",
    "places_above",
    "ramification_solutions",
    "roots",
    "sqrt",
    "two_torsion_module",
    "weil_poly",
    "__version__",
]

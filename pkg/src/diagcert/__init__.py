"""Exact similarity certificates realizing prescribed diagonals.

Construction routines live in :mod:`diagcert.prescribe`, canonical forms in
:mod:`diagcert.canonical`, the impossibility lab in
:mod:`diagcert.counterexample` and the JSON surface in
:mod:`diagcert.serialization` / :mod:`diagcert.cli`.
"""

from .rings import (
    ALPHA,
    BETA,
    CubicNumber,
    PrimeFieldElement,
    QBETA,
    QQ,
    Z_ALPHA,
    Z_IN_Q,
    ZZ,
    crt,
    ext_gcd,
    in_z_alpha,
    prime_field,
)
from .polynomials import Poly, PolyMatrix, poly_divmod, poly_gcd, poly_lcm
from .matrices import (
    DiagonalConj,
    Matrix,
    PermutationConj,
    SimilarityCertificate,
    Transvection,
    adjugate,
    apply_conj,
    det,
    inverse,
    is_scalar,
    verify_certificate,
)
from .normal_forms import (
    complete_primitive_vector,
    hermite_normal_form,
    integer_kernel_basis,
    smith_normal_form,
)
from .canonical import (
    FrobeniusForm,
    charpoly,
    companion_matrix,
    eval_poly_at_matrix,
    frobenius_form,
    invariant_factors,
    minpoly,
    monic_divisor_integrality,
)
from .prescribe import (
    Decision2x2,
    NonscalarityIdeal,
    decide_2x2,
    fillmore_field,
    good_vector_search,
    is_scalar_mod,
    nonscalarity_ideal,
    prescribe_ksim_integral,
    prescribe_with_unit,
    prescribe_zsim,
)
from .counterexample import (
    ObstructionReport,
    CounterexampleReport,
    brewer_matrix,
    forced_products_obstruction,
    verify_counterexample,
)
from .testkit import InstanceSpec, brute_force_diag_search, gen_matrix, gen_target

__all__ = [
    "ALPHA",
    "BETA",
    "CubicNumber",
    "Decision2x2",
    "DiagonalConj",
    "FrobeniusForm",
    "InstanceSpec",
    "Matrix",
    "NonscalarityIdeal",
    "ObstructionReport",
    "PermutationConj",
    "Poly",
    "PolyMatrix",
    "PrimeFieldElement",
    "CounterexampleReport",
    "QBETA",
    "QQ",
    "SimilarityCertificate",
    "Transvection",
    "Z_ALPHA",
    "Z_IN_Q",
    "ZZ",
    "adjugate",
    "apply_conj",
    "brewer_matrix",
    "brute_force_diag_search",
    "charpoly",
    "companion_matrix",
    "complete_primitive_vector",
    "crt",
    "decide_2x2",
    "det",
    "eval_poly_at_matrix",
    "ext_gcd",
    "fillmore_field",
    "forced_products_obstruction",
    "frobenius_form",
    "gen_matrix",
    "gen_target",
    "good_vector_search",
    "hermite_normal_form",
    "in_z_alpha",
    "integer_kernel_basis",
    "invariant_factors",
    "inverse",
    "is_scalar",
    "is_scalar_mod",
    "minpoly",
    "monic_divisor_integrality",
    "nonscalarity_ideal",
    "poly_divmod",
    "poly_gcd",
    "poly_lcm",
    "prescribe_ksim_integral",
    "prescribe_with_unit",
    "prescribe_zsim",
    "prime_field",
    "smith_normal_form",
    "verify_certificate",
    "verify_counterexample",
]

"""Exact-arithmetic q-log-convexity toolkit for Domb and Narayana-type families."""

from .exactcore import BinomialCache, ExactInt, ExactRat, binom, central_binom, rat_cmp
from .polynomials import (
    IntervalSign,
    Poly,
    derivative,
    eval_rat,
    is_self_reciprocal,
    poly_add,
    poly_mul,
    poly_scale,
    poly_sub,
    sign_constant_on,
    sturm_chain,
    sturm_count_roots,
)
from .families import (
    DOMB_ARRAY,
    NARAYANA_ARRAY,
    TriangularArray,
    coeff_a,
    domb_number,
    family_poly,
    weighted_assembly,
)
from .criteria import (
    CriterionReport,
    MonotonicityReport,
    QlcWitness,
    SignCrossing,
    criterion_c2_sweep,
    criterion_verdict,
    log_convex_check,
    op_L,
    op_L_tilde,
    q_log_convex_direct,
    root_monotonicity_check,
    single_crossing,
)
from .proofpolys import IdentityError, NnBundle, PsiBundle, ThetaBundle, build_psi, build_psi_nn, build_theta
from .verification import (
    Certificate,
    ClaimRecord,
    VerificationConfig,
    chan_partial_sum,
    factorization_check,
    identity_grid_check,
    run_full_verification,
    verify_claims,
    verify_prop31,
    verify_prop32,
    verify_prop33,
)

__version__ = "0.1.0"

__all__ = [
    "BinomialCache", "ExactInt", "ExactRat", "binom", "central_binom", "rat_cmp",
    "IntervalSign", "Poly", "derivative", "eval_rat", "is_self_reciprocal",
    "poly_add", "poly_mul", "poly_scale", "poly_sub", "sign_constant_on",
    "sturm_chain", "sturm_count_roots",
    "DOMB_ARRAY", "NARAYANA_ARRAY", "TriangularArray", "coeff_a", "domb_number",
    "family_poly", "weighted_assembly",
    "CriterionReport", "MonotonicityReport", "QlcWitness", "SignCrossing",
    "criterion_c2_sweep", "criterion_verdict", "log_convex_check", "op_L",
    "op_L_tilde", "q_log_convex_direct", "root_monotonicity_check", "single_crossing",
    "IdentityError", "NnBundle", "PsiBundle", "ThetaBundle", "build_psi",
    "build_psi_nn", "build_theta",
    "Certificate", "ClaimRecord", "VerificationConfig", "chan_partial_sum",
    "factorization_check", "identity_grid_check", "run_full_verification",
    "verify_claims", "verify_prop31", "verify_prop32", "verify_prop33",
    "__version__",
]

"""Exact p-adic linear algebra for the decomposition GL_n(Q_p) = ⊔_w R_w·B and
the principal series functions built on it."""

from .decomp import (
    RBDecomposition,
    bruhat_cell,
    classify_Uw,
    in_UlwB,
    matches_Rw,
    rb_decompose,
    rw_pattern,
)
from .errors import (
    CharacterNotAdmissible,
    DenominatorZero,
    DimensionMismatch,
    DivisionByZero,
    IndexOutOfRange,
    InsufficientPrecision,
    InvalidPreset,
    NotInBPlus,
    NotUpperTriangular,
    PrecisionError,
    SingularToPrecision,
    ZeroArgument,
)
from .kfield import GF, FFElem, FiniteField
from .matrix import DiagElement, PMatrix, elementary_diag, mat_inv, mat_mul, membership
from .padic import (
    DEFAULT_PRECISION,
    PAdic,
    padic_add,
    padic_from_rational,
    padic_inv,
    padic_mul,
    padic_neg,
    unit_residue,
    valuation_at_least,
)
from .principal_series import (
    Character,
    PSElement,
    Report,
    act_bplus,
    build_counterexample,
    char_eval,
    eval_element,
    eval_fw,
    is_irreducible_char,
    lemma_theta_check,
    nprime_invariance_check,
    quotient_formula_check,
)
from .suites import SUITES, RunConfig, run_suite
from .weyl import (
    PositionMask,
    WeylElement,
    WeylOrdering,
    all_elements,
    bruhat_leq,
    bruhat_leq_chain,
    length,
    standard_ordering,
    theta_representatives,
)

__all__ = [
    "act_bplus",
    "all_elements",
    "bruhat_cell",
    "bruhat_leq",
    "bruhat_leq_chain",
    "build_counterexample",
    "char_eval",
    "Character",
    "CharacterNotAdmissible",
    "classify_Uw",
    "DEFAULT_PRECISION",
    "DenominatorZero",
    "DiagElement",
    "DimensionMismatch",
    "DivisionByZero",
    "elementary_diag",
    "eval_element",
    "eval_fw",
    "FFElem",
    "FiniteField",
    "GF",
    "in_UlwB",
    "IndexOutOfRange",
    "InsufficientPrecision",
    "InvalidPreset",
    "is_irreducible_char",
    "lemma_theta_check",
    "length",
    "mat_inv",
    "mat_mul",
    "matches_Rw",
    "membership",
    "NotInBPlus",
    "NotUpperTriangular",
    "nprime_invariance_check",
    "PAdic",
    "padic_add",
    "padic_from_rational",
    "padic_inv",
    "padic_mul",
    "padic_neg",
    "PMatrix",
    "PositionMask",
    "PrecisionError",
    "PSElement",
    "quotient_formula_check",
    "rb_decompose",
    "RBDecomposition",
    "Report",
    "run_suite",
    "RunConfig",
    "rw_pattern",
    "SingularToPrecision",
    "standard_ordering",
    "SUITES",
    "theta_representatives",
    "unit_residue",
    "valuation_at_least",
    "WeylElement",
    "WeylOrdering",
    "ZeroArgument",
]

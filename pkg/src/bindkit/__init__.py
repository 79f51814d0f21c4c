"""bindkit: lambda-terms modulo alpha, rensets, and renaming-based recursion."""

from .terms import (
    VarId, Term, Vr, Ap, Lm, FinTermEnv, Names, ParseError, var, fresh_var, free_vars,
    is_fresh, rename, swap, subst, psubst, alpha_eq, to_debruijn, from_debruijn,
    parse_term, print_term, print_debruijn, enum_terms, sample_term, alpha_variant,
)
from .reports import LawReport, Violation, dumps, all_passed
from .renset import (
    RensetInstance, NominalInstance, TERM_RENSET, TERM_NOMINAL, VAR_RENSET,
    check_renset_laws, check_prop3_equivalence, check_prop4, derived_fresh,
    derived_swap, derive_nominal, check_nominal_laws, check_pivot_independence,
    check_swap_freshness_agreement, check_ce_nominal_laws, check_support_commutation, check_morphism,
    lift_renset_list, lift_renset_pair, lift_renset_option,
)
from .perm import (
    FinPerm, perm_identity, perm_transposition, perm_compose, perm_invert,
    decompose_transpositions, to_swap_action, to_perm_action, TERM_PERM,
)
from .recursion import (
    CERensetSpec, FRCESpec, CESubstSpec, recurse, prim_recurse, subst_recurse,
    check_ce_laws, check_frce_laws, check_subst_laws, check_recursor_clauses,
    induced_renset, TERM_CE, TERM_SUBST,
)
from .semantics import (
    SemDomain, Env, Interp, interp_ce_spec, sem, fcb_contrast_report, fixture_domain,
    normalize, FuelExhausted, length_of, clam, cfv, cbv, can_eta,
    subst_via_recursor, psubst_via_recursor, cross_check,
)

__all__ = [
    "VarId",
    "Term",
    "Vr",
    "Ap",
    "Lm",
    "FinTermEnv",
    "Names",
    "ParseError",
    "var",
    "fresh_var",
    "free_vars",
    "is_fresh",
    "rename",
    "swap",
    "subst",
    "psubst",
    "alpha_eq",
    "to_debruijn",
    "from_debruijn",
    "parse_term",
    "print_term",
    "print_debruijn",
    "enum_terms",
    "sample_term",
    "alpha_variant",
    "LawReport",
    "Violation",
    "dumps",
    "all_passed",
    "RensetInstance",
    "NominalInstance",
    "TERM_RENSET",
    "TERM_NOMINAL",
    "VAR_RENSET",
    "check_renset_laws",
    "check_prop3_equivalence",
    "check_prop4",
    "derived_fresh",
    "derived_swap",
    "derive_nominal",
    "check_nominal_laws",
    "check_pivot_independence",
    "check_swap_freshness_agreement",
    "check_ce_nominal_laws",
    "check_support_commutation",
    "check_morphism",
    "lift_renset_list",
    "lift_renset_pair",
    "lift_renset_option",
    "FinPerm",
    "perm_identity",
    "perm_transposition",
    "perm_compose",
    "perm_invert",
    "decompose_transpositions",
    "to_swap_action",
    "to_perm_action",
    "TERM_PERM",
    "CERensetSpec",
    "FRCESpec",
    "CESubstSpec",
    "recurse",
    "prim_recurse",
    "subst_recurse",
    "check_ce_laws",
    "check_frce_laws",
    "check_subst_laws",
    "check_recursor_clauses",
    "induced_renset",
    "TERM_CE",
    "TERM_SUBST",
    "SemDomain",
    "Env",
    "Interp",
    "interp_ce_spec",
    "sem",
    "fcb_contrast_report",
    "fixture_domain",
    "normalize",
    "FuelExhausted",
    "length_of",
    "clam",
    "cfv",
    "cbv",
    "can_eta",
    "subst_via_recursor",
    "psubst_via_recursor",
    "cross_check",
]

__version__ = "0.1.0"

from tabkit.charverify.highest_weight import (
    HighestWeight,
    alphabets,
    highest_weight_gl,
    highest_weight_super,
    highest_weight_tableau,
    highest_weight_tableau_gl,
    super_character_window,
    weight_matches,
)
from tabkit.charverify.identities import (
    ab_product_check,
    cauchy_check,
    h_expansion_check,
    jacobi_trudi_check,
    jacobi_trudi_stability,
    rational_branching_check,
    rational_lr_check,
    skew_character_check,
    specialize,
)
from tabkit.charverify.report import CheckReport, compare, merge

__all__ = [
    "CheckReport",
    "HighestWeight",
    "ab_product_check",
    "alphabets",
    "cauchy_check",
    "compare",
    "h_expansion_check",
    "highest_weight_gl",
    "highest_weight_super",
    "highest_weight_tableau",
    "highest_weight_tableau_gl",
    "jacobi_trudi_check",
    "jacobi_trudi_stability",
    "merge",
    "rational_branching_check",
    "rational_lr_check",
    "skew_character_check",
    "specialize",
    "super_character_window",
    "weight_matches",
]

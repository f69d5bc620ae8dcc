from tabkit.duality.product import rho_ab, rho_ab_inv
from tabkit.duality.rsk import (
    LevelOneWord,
    check_weights,
    kappa,
    kappa_content,
    kappa_inv,
    level_one_words,
    word_tuples,
)
from tabkit.duality.skew import skew_jdt_ab, skew_jdt_ab_inv

__all__ = [
    "LevelOneWord",
    "check_weights",
    "kappa",
    "kappa_content",
    "kappa_inv",
    "level_one_words",
    "rho_ab",
    "rho_ab_inv",
    "skew_jdt_ab",
    "skew_jdt_ab_inv",
    "word_tuples",
]

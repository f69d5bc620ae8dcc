import pytest

from tabkit.abtableau import character_ab, validate_ab
from tabkit.alphabet import GradedAlphabet, half_nonpos_prime, half_pos_prime, znonpos, zpos
from tabkit.charverify import (
    ab_product_check,
    cauchy_check,
    compare,
    h_expansion_check,
    highest_weight_gl,
    highest_weight_super,
    highest_weight_tableau,
    highest_weight_tableau_gl,
    jacobi_trudi_check,
    jacobi_trudi_stability,
    merge,
    rational_branching_check,
    rational_lr_check,
    skew_character_check,
    specialize,
    super_character_window,
    weight_matches,
)
from tabkit.exception import AlphabetMismatch
from tabkit.laurent import LaurentPoly
from tabkit.shape import GeneralizedPartition, Partition


def letters(name, prefix, k, parities=None):
    return GradedAlphabet.from_labels(name, [f"{prefix}{i}" for i in range(1, k + 1)], parities)


A1, B1 = letters("A", "a", 1), letters("B", "b", 1)
A2, B2 = letters("A", "a", 2), letters("B", "b", 2)


def test_compare_and_merge():
    p = LaurentPoly.var("x") + 1
    ok = compare("same", p, p)
    bad = compare("off", p, p + LaurentPoly.var("y"))
    assert ok.passed and not ok.mismatches
    assert not bad.passed
    assert len(bad.mismatches) == 1
    merged = merge("both", [ok, bad])
    assert not merged.passed
    assert merged.details["failed"] == ["off"]
    assert merged.mismatches[0].startswith("off: ")


def test_specialize_drops_other_variables():
    p = LaurentPoly.var("a1") + LaurentPoly.var("a2") * LaurentPoly.var("a1")
    assert specialize(p, ["a1"]) == LaurentPoly.var("a1")


@pytest.mark.parametrize("a_parity", [0, 1])
@pytest.mark.parametrize("b_parity", [0, 1])
def test_cauchy_single_letters(a_parity, b_parity):
    a = letters("A", "a", 1, [a_parity])
    b = letters("B", "b", 1, [b_parity])
    assert cauchy_check(1, a, b, (2, 2)).passed


def test_cauchy_level_two():
    assert cauchy_check(2, A1, B1, (1, 1)).passed


def test_cauchy_names_must_differ():
    with pytest.raises(AlphabetMismatch):
        cauchy_check(1, letters("A", "x", 1), B1, (1, 1))


def test_one_box_coefficient():
    poly = character_ab((1,), A1, B1, 3)
    assert poly.coefficient({"a1": 2, "b1": -1}) == 1


@pytest.mark.parametrize("lam", [(1, 1), (1, -1), (0, -1), (2, 0)])
def test_jacobi_trudi(lam):
    report = jacobi_trudi_check(lam, A2, B2, 2)
    assert report.passed
    assert report.details["sympy_det"]


def test_jacobi_trudi_across_truncations():
    pairs = [(half_pos_prime(2), half_nonpos_prime(2)), (half_pos_prime(3), half_nonpos_prime(3))]
    assert jacobi_trudi_stability((1, -1), pairs, 2).passed


@pytest.mark.parametrize("mu", [(1, 0), (1, -1), (0, -1)])
def test_h_expansion(mu):
    report = h_expansion_check(mu, A2, B2, 2)
    assert report.passed
    assert report.details["triangular"]


@pytest.mark.parametrize("mu, nu", [((1, 0), (0, -1)), ((1, 0), (1, 0)), ((1, -1), (0, -1))])
def test_rational_lr(mu, nu):
    assert rational_lr_check(mu, nu).passed


def test_rational_branching():
    assert rational_branching_check((1, -1), 1, 1).passed
    assert rational_branching_check((1, 0, -1), 2, 1).passed
    with pytest.raises(AlphabetMismatch):
        rational_branching_check((1, -1), 1, 2)


def test_ab_product():
    assert ab_product_check((1,), (-1,), A1, B1, 2).passed
    assert ab_product_check((1,), (1,), A2, B2, 1).passed


def test_skew_character():
    assert skew_character_check((1, 0), (0, -1), A2, B2, 1).passed


def test_highest_weight_super():
    hw = highest_weight_super((4, 3, 2, -2, -3))
    assert hw.central == 5
    assert hw.diag == {"2": 1, "3/2": 2, "1": 2, "1/2": 4, "0": -2, "-1/2": -2, "-1": -1}
    assert highest_weight_super(GeneralizedPartition.zero(3)).diag == {}


def test_highest_weight_tableau_super():
    x = highest_weight_tableau((4, 3, 2, -2, -3))
    assert x.d == 3
    assert x.mu == Partition((3, 3, 3, 1))
    assert x.tplus.to_rows() == [["1/2"] * 4, ["1", "3/2", "3/2"], ["1", "2"], []]
    assert x.tminus.to_rows() == [[], [], [], ["-1", "0"], ["-1/2", "-1/2", "0"]]
    assert validate_ab(x)
    assert weight_matches(x, highest_weight_super((4, 3, 2, -2, -3)))


@pytest.mark.parametrize("lam", [(1,), (2, -1), (3, 1, -2), (0, -1, -1), (2, 2, 0, -3)])
def test_highest_weight_tableaux_match(lam):
    assert weight_matches(highest_weight_tableau(lam), highest_weight_super(lam))
    assert weight_matches(highest_weight_tableau_gl(lam), highest_weight_gl(lam))


def test_highest_weight_gl():
    hw = highest_weight_gl((2, -1))
    assert hw.central == -2
    assert hw.diag == {"1": 2, "0": -1}
    x = highest_weight_tableau_gl((2, -1))
    assert x.tplus.to_rows() == [["1", "1"]]
    assert x.tminus.to_rows() == [[], ["0"]]


def test_character_window_modes():
    assert super_character_window((1,), 2, 1, mode="gl") == character_ab(
        (1,), zpos(2), znonpos(2), 1
    )
    assert super_character_window((1,), 2, 1) == character_ab(
        (1,), half_pos_prime(2), half_nonpos_prime(2), 1
    )

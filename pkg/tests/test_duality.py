import pytest

from tabkit.abtableau import ABTableau, empty_ab, enumerate_ab
from tabkit.alphabet import GradedAlphabet
from tabkit.duality import (
    LevelOneWord,
    check_weights,
    kappa,
    kappa_content,
    kappa_inv,
    level_one_words,
    rho_ab,
    rho_ab_inv,
    skew_jdt_ab,
    skew_jdt_ab_inv,
    word_tuples,
)
from tabkit.exception import AlphabetMismatch, ShapeMismatch
from tabkit.rational import RationalTableau
from tabkit.shape import GeneralizedPartition, Partition
from tabkit.suites import rho_ab_example, rsk_example_words
from tabkit.tableau import Tableau

G = GeneralizedPartition.of


def letters(name, prefix, k):
    return GradedAlphabet.from_labels(name, [f"{prefix}{i}" for i in range(1, k + 1)])


A1, B1 = letters("A", "a", 1), letters("B", "b", 1)
A2, B2 = letters("A", "a", 2), letters("B", "b", 2)


def test_rsk_of_two_words():
    a, b, words = rsk_example_words()
    p_w, q_w = kappa(words)
    assert p_w.shape == G((2, -1))
    assert p_w.d == 5
    assert p_w.mu == Partition((3,))
    assert p_w.tplus == Tableau.from_rows(
        a, [["a1", "a3", "a5", "a6"], ["a1", "a1", "a2", "a4"]], (3,)
    )
    minus = [["b2", "b3"], ["b3", "b3", "b4", "b6", "b6"]]
    assert p_w.tminus == Tableau.from_rows(b, minus, (3,))
    assert q_w == RationalTableau.of((2, -1), [(1, 2), (-2,)])
    assert check_weights(words, p_w, q_w)
    assert kappa_inv(p_w, q_w) == words


def test_words_must_share_alphabets():
    w1 = LevelOneWord.of(A1, ["a1"], B1, [])
    w2 = LevelOneWord.of(A2, ["a1"], B1, [])
    with pytest.raises(AlphabetMismatch):
        kappa([w1, w2])
    with pytest.raises(ShapeMismatch):
        kappa([])


def test_word_must_be_a_row():
    with pytest.raises(ShapeMismatch):
        LevelOneWord.of(A2, ["a2", "a1"], B2, [])


def test_level_one_words():
    words = list(level_one_words(0, A1, B1, 1))
    assert [w.labels() for w in words] == [([], []), (["a1"], ["b1"])]
    assert all(w.charge == 0 for w in words)


@pytest.mark.parametrize("charges", [(1, 0), (0, -1), (1, -1), (0, 0)])
def test_rsk_round_trip(charges):
    for words in word_tuples(charges, A2, B2, 1):
        p_w, q_w = kappa(list(words))
        assert check_weights(words, p_w, q_w)
        assert kappa_inv(p_w, q_w) == list(words)


@pytest.mark.parametrize("charges", [(1, 0), (1, -1)])
def test_rsk_counts(charges):
    left, right = kappa_content(charges, A2, B2, 1)
    assert left == right


def test_product_rule():
    t1, t2, want = rho_ab_example()
    t, cls = rho_ab(t1, t2)
    assert t == want
    assert cls.kind == "dual"
    assert cls.d == 2
    assert cls.rep.inner == Partition((2, 1, 1, 1))
    assert cls.rep.to_rows() == [["1"], ["1"], [], [], ["2"], ["3"]]
    assert rho_ab_inv(t, cls) == (t1, t2)


def test_product_rule_ignores_working_width():
    t1, t2, _ = rho_ab_example()
    assert rho_ab(t1, t2, d=t1.d + t2.d + 1) == rho_ab(t1, t2)
    with pytest.raises(ShapeMismatch):
        rho_ab(t1, t2, d=0)


def test_product_rule_checks_alphabets():
    t1, t2, _ = rho_ab_example()
    other = t2.model_copy(update={"tplus": t2.tplus.relabel(letters("C", "c", 4))})
    with pytest.raises(AlphabetMismatch):
        rho_ab(t1, other)


@pytest.mark.parametrize(
    "first, second",
    [((1,), (0,)), ((1,), (-1,)), ((0,), (-1,)), ((0,), (1, -1))],
)
def test_product_rule_round_trip(first, second):
    for t1 in enumerate_ab(first, A2, B2, 1):
        for t2 in enumerate_ab(second, A2, B2, 1):
            t, cls = rho_ab(t1, t2)
            assert t.level == t1.level + t2.level
            assert t.shape.charge == t1.shape.charge + t2.shape.charge
            assert rho_ab_inv(t, cls) == (t1, t2)


def test_product_of_empty_factors():
    x = empty_ab(1, A2, B2)
    t, cls = rho_ab(x, x)
    assert t.shape == G((0, 0))
    assert t.d == 0
    assert rho_ab_inv(t, cls) == (x, x)


def test_product_rule_without_negative_cells():
    # no T- cells on either side, so the working d is 0
    for t1 in enumerate_ab((1,), A2, B2, 0):
        for t2 in enumerate_ab((0,), A2, B2, 0):
            t, cls = rho_ab(t1, t2)
            assert t.d == 0
            assert rho_ab_inv(t, cls) == (t1, t2)


MIXED = [[0, 1], [1, 0]]


def graded(parities):
    a = GradedAlphabet.from_labels("A", ["a1", "a2"], parities)
    b = GradedAlphabet.from_labels("B", ["b1", "b2"], parities)
    return a, b


@pytest.mark.parametrize("parities", MIXED)
@pytest.mark.parametrize("charges", [(1, 0), (1, -1), (0, 0)])
def test_rsk_round_trip_over_mixed_parities(charges, parities):
    a, b = graded(parities)
    for words in word_tuples(charges, a, b, 1):
        p_w, q_w = kappa(list(words))
        assert check_weights(words, p_w, q_w)
        assert kappa_inv(p_w, q_w) == list(words)


@pytest.mark.parametrize("parities", MIXED)
@pytest.mark.parametrize("first, second", [((1,), (0,)), ((1,), (-1,)), ((0,), (1, -1))])
def test_product_rule_round_trip_over_mixed_parities(first, second, parities):
    a, b = graded(parities)
    for t1 in enumerate_ab(first, a, b, 1):
        for t2 in enumerate_ab(second, a, b, 1):
            t, cls = rho_ab(t1, t2)
            assert rho_ab_inv(t, cls) == (t1, t2)


@pytest.mark.parametrize("parities", MIXED)
@pytest.mark.parametrize("shape, inner", [((0,), (-1,)), ((1, 0), (0, -1))])
def test_skew_round_trip_over_mixed_parities(shape, inner, parities):
    a, b = graded(parities)
    for x in enumerate_ab(shape, a, b, 1, inner_shape=inner):
        assert skew_jdt_ab_inv(*skew_jdt_ab(x)) == x


@pytest.mark.parametrize("shape", [(1,), (0, -1), (1, -1)])
def test_skew_rule_on_straight_shapes_round_trips(shape):
    for x in enumerate_ab(shape, A2, B2, 1):
        j, cls = skew_jdt_ab(x)
        back = skew_jdt_ab_inv(j, cls)
        assert not back.is_skew
        assert back == x


def test_skew_rectification_of_one_box():
    (x,) = list(enumerate_ab((1,), A1, B1, 0, inner_shape=(0,)))
    j, cls = skew_jdt_ab(x)
    assert j.shape == G((1,))
    assert not j.is_skew
    assert j.tplus.to_rows() == [["a1"]]
    assert cls.kind == "slash"
    assert cls.nu == G((1,))
    assert skew_jdt_ab_inv(j, cls) == x


@pytest.mark.parametrize(
    "shape, inner",
    [((0,), (-1,)), ((1, 0), (0, -1)), ((1, 1), (1, 0)), ((0, -1), (0, -1))],
)
def test_skew_round_trip(shape, inner):
    for x in enumerate_ab(shape, A2, B2, 1, inner_shape=inner):
        j, cls = skew_jdt_ab(x)
        assert isinstance(j, ABTableau)
        assert j.shape.charge == x.shape.charge - x.base.charge
        assert skew_jdt_ab_inv(j, cls) == x

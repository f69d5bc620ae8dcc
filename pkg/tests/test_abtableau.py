import pytest

from tabkit.abtableau import (
    ABTableau,
    ab_problems,
    branch,
    branch_inv,
    canonicalize,
    character_ab,
    empty_ab,
    enumerate_ab,
    is_canonical,
    reembed,
    validate_ab,
)
from tabkit.alphabet import GradedAlphabet
from tabkit.exception import AlphabetMismatch, NotCanonical, ShapeMismatch
from tabkit.laurent import LaurentPoly
from tabkit.shape import GeneralizedPartition, Partition
from tabkit.tableau import Tableau


def letters(name, prefix, k, parities=None):
    return GradedAlphabet.from_labels(name, [f"{prefix}{i}" for i in range(1, k + 1)], parities)


A1, B1 = letters("A", "a", 1), letters("B", "b", 1)
A2, B2 = letters("A", "a", 2), letters("B", "b", 2)


def test_enumerate_level_one_zero_shape():
    found = list(enumerate_ab((0,), A1, B1, 1))
    assert [x.d for x in found] == [0, 1]
    assert all(validate_ab(x) and is_canonical(x) for x in found)
    a, b = LaurentPoly.var("a1"), LaurentPoly.var("b1")
    assert character_ab((0,), A1, B1, 1) == 1 + a * b**-1


def test_character_of_one_box():
    a, b = LaurentPoly.var("a1"), LaurentPoly.var("b1")
    assert character_ab((1,), A1, B1, 1) == a + a**2 * b**-1
    assert character_ab((1,), A1, B1, 2) == a + a**2 * b**-1 + a**3 * b**-2


def test_fermionic_letters_are_row_strict():
    odd = letters("A", "a", 1, [1])
    found = list(enumerate_ab((2,), odd, B1, 0))
    assert found == []


def test_character_needs_disjoint_labels():
    with pytest.raises(AlphabetMismatch):
        character_ab((1,), A1, letters("B", "a", 1), 1)


def test_reembed_and_canonicalize():
    (x,) = [t for t in enumerate_ab((1,), A1, B1, 1) if t.d == 1]
    wide = reembed(x, 3)
    assert wide.d == 3
    assert wide.mu == Partition((2,))
    assert wide.tplus.outer == Partition((4,))
    assert validate_ab(wide)
    assert not is_canonical(wide)
    assert canonicalize(wide) == x
    assert reembed(wide, 1) == x
    with pytest.raises(NotCanonical):
        reembed(x, 0)


def test_level_two_window():
    found = list(enumerate_ab((1, -1), A2, B2, 1))
    assert len(found) == 4
    assert {x.mu for x in found} == {Partition((1,))}
    assert all(x.d == 1 for x in found)


def test_problems_are_listed():
    x = ABTableau(
        shape=GeneralizedPartition.of((1,)),
        d=0,
        mu=Partition(),
        tplus=Tableau.from_rows(A1, [["a1", "a1"]]),
        tminus=Tableau.empty(B1),
    )
    problems = ab_problems(x)
    assert any("T+ has outer shape" in p for p in problems)
    assert not validate_ab(x)


def test_negative_d_rejected():
    with pytest.raises(ShapeMismatch):
        ABTableau(
            shape=GeneralizedPartition.zero(1),
            d=-1,
            mu=Partition(),
            tplus=Tableau.empty(A1),
            tminus=Tableau.empty(B1),
        )


def test_empty_ab():
    x = empty_ab(2, A1, B1)
    assert validate_ab(x)
    assert x.weight().monomial() == LaurentPoly.one()


@pytest.mark.parametrize("shape", [(1, -1), (1, 0), (0, -1), (2, -1)])
def test_branch_round_trip(shape):
    for x in enumerate_ab(shape, A2, B2, 2):
        cls, s, s_prime = branch(x)
        assert s.validate() and s_prime.validate()
        assert canonicalize(branch_inv(cls, s, s_prime)) == x


def test_zero_inner_shape_is_straight():
    (x,) = list(enumerate_ab((1,), A1, B1, 0, inner_shape=(0,)))
    assert not x.is_skew
    assert x == next(iter(enumerate_ab((1,), A1, B1, 0)))
    assert ABTableau.from_json(x.to_json()) == x


def test_branch_needs_straight_shape():
    (x,) = list(enumerate_ab((1,), A1, B1, 0))
    skew = ABTableau(**{**dict(x), "inner_shape": GeneralizedPartition.of((-1,))})
    assert skew.is_skew
    with pytest.raises(ShapeMismatch):
        branch(skew)


@pytest.mark.parametrize("parities", [[0, 1], [1, 0]])
@pytest.mark.parametrize("shape", [(1, -1), (2, -1), (1, 0)])
def test_branch_round_trip_mixed_parity(shape, parities):
    a, b = letters("A", "a", 2, parities), letters("B", "b", 2, parities)
    for x in enumerate_ab(shape, a, b, 2):
        cls, s, s_prime = branch(x)
        assert s.validate() and s_prime.validate()
        assert canonicalize(branch_inv(cls, s, s_prime)) == x


def test_render_and_json():
    (x,) = [t for t in enumerate_ab((1, -1), A2, B2, 1) if t.tplus.to_rows() == [["a1"]]][:1]
    text = x.render_ascii()
    assert text.startswith("T-:")
    assert "|" in text
    assert ABTableau.from_json(x.to_json()) == x

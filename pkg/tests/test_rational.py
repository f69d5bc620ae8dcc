import pytest

from tabkit.alphabet import interval
from tabkit.exception import RectangleTooSmall, ShapeMismatch
from tabkit.laurent import LaurentPoly
from tabkit.rational import (
    RationalTableau,
    check_stroomer,
    delta,
    enumerate_rational,
    from_tableau,
    kostka,
    rational_schur,
    sigma,
    sigma_inv,
    sigma_pow,
    to_tableau,
)
from tabkit.tableau import Tableau, enumerate_sst


@pytest.fixture
def mixed():
    return RationalTableau.of((3, 2, 0, -1, -2), [(2, 3, 5), (4, 4), (), (-5,), (-4, -2)])


@pytest.fixture
def t():
    return Tableau.from_rows(interval(4), [["1", "2", "2", "3"], ["3", "4", "4"], ["4"]])


def test_columns_and_weight(mixed):
    assert mixed.validate()
    assert mixed.column(1) == [2, 4]
    assert mixed.column(-1) == [-5, -2]
    assert mixed.column(-2) == [-4]
    assert mixed.weight() == {1: 0, 2: 0, 3: 1, 4: 1, 5: 0}


def test_first_column_condition():
    assert RationalTableau.of((1, -1), [(2,), (-2,)]).validate()
    assert not RationalTableau.of((1, -1), [(1,), (-1,)]).validate()


def test_row_lengths_checked():
    with pytest.raises(ShapeMismatch):
        RationalTableau.of((2, -1), [(1,), (-1,)])


def test_sigma_moves_column(mixed):
    shifted = sigma(mixed)
    assert shifted.shape.parts == (4, 3, 1, 0, -1)
    assert shifted.rows == ((1, 2, 3, 5), (3, 4, 4), (4,), (), (-4,))
    assert shifted.validate()
    assert sigma_inv(shifted) == mixed


def test_sigma_preserves_weight_up_to_shift(mixed):
    w = mixed.weight()
    shifted = sigma(mixed).weight()
    assert {k: shifted[k] - w[k] for k in w} == {k: 1 for k in w}


def test_sigma_pow_and_delta(t):
    low = sigma_pow(from_tableau(t, 4), -5)
    assert low.rows == ((-4,), (-4, -3), (-3, -3, -2, -2), (-2, -1, -1, -1, -1))
    d = delta(t, 5, 4)
    assert d.to_rows() == [
        ["1", "1", "1", "1", "2"],
        ["2", "2", "3", "3"],
        ["3", "4"],
        ["4"],
    ]
    assert delta(d, 5, 4) == t


def test_delta_rectangle_checks(t):
    with pytest.raises(RectangleTooSmall):
        delta(t, 3, 4)
    with pytest.raises(ShapeMismatch):
        delta(t, 5, 2)


def test_tableau_conversion(t):
    r = from_tableau(t, 4)
    assert r.shape.parts == (4, 3, 1, 0)
    assert to_tableau(r) == t
    with pytest.raises(ShapeMismatch):
        to_tableau(RationalTableau.of((0, -1), [(), (-1,)]))


def test_complement_insertion():
    for t1 in enumerate_sst(interval(2), (2,)):
        for t2 in enumerate_sst(interval(2), (1, 1)):
            assert check_stroomer(t1, t2, 2, 2)
            assert check_stroomer(t1, t2, 3, 1)


def test_enumerate_rational_adjoint():
    found = list(enumerate_rational((1, -1)))
    assert sorted(x.rows for x in found) == [((1,), (-2,)), ((2,), (-2,)), ((2,), (-1,))]
    with pytest.raises(ShapeMismatch):
        list(enumerate_rational((1, -1), 3))


def test_rational_schur():
    x1, x2 = LaurentPoly.var("x1"), LaurentPoly.var("x2")
    assert rational_schur((0, -1)) == x1**-1 + x2**-1
    assert rational_schur((1, -1)) == x1 * x2**-1 + 1 + x2 * x1**-1
    assert rational_schur((1, 0)) == x1 + x2


@pytest.mark.parametrize(
    "shape, content, count",
    [
        ((2, 0), (1, 1), 1),
        ((1, -1), (0, 0), 1),
        ((1, -1), (1, -1), 1),
        ((1, -1), (1, 0), 0),
        ((1, 1), (1, 1), 1),
    ],
)
def test_kostka(shape, content, count):
    assert kostka(shape, content) == count


def test_json_round_trip(mixed):
    data = mixed.to_json()
    assert data["columns"]["-1"] == [-5, -2]
    assert RationalTableau.from_json(data) == mixed


def test_render_ascii(mixed):
    lines = mixed.render_ascii().splitlines()
    assert len(lines) == 5
    assert all("|" in line for line in lines)

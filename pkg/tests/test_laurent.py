import pytest
import sympy

from tabkit.laurent import LaurentPoly, det, det_sympy, same

x = LaurentPoly.var("x")
y = LaurentPoly.var("y")


def test_det_one_by_one():
    p = x * y + 3
    assert det([[p]]) == p


def test_det_two_by_two():
    assert det([[x, y], [1, x]]) == x**2 - y


def test_det_matches_sympy():
    m = [[x, y, 1], [LaurentPoly.var("z"), x ** -1, y], [1, 0, x]]
    assert same(det(m), det_sympy(m))


@pytest.mark.parametrize(
    "a, b, c",
    [
        (x + 1, y - 2, x * y),
        (x ** -1 + y, x, 1 - y),
        (LaurentPoly.zero(), x, y ** -2),
    ],
)
def test_mul_distributes(a, b, c):
    assert a * (b + c) == a * b + a * c


def test_zero_terms_are_dropped():
    assert (x - x).is_zero()
    assert (x - x).terms == {}


def test_negative_power_of_monomial():
    assert (x * y) ** -2 == LaurentPoly.monomial({"x": -2, "y": -2})
    with pytest.raises(ValueError):
        (x + y) ** -1


def test_coefficient_and_degree():
    p = 3 * LaurentPoly.monomial({"x": 2, "y": -1}) + x
    assert p.coefficient({"x": 2, "y": -1}) == 3
    assert p.coefficient({"y": 1}) == 0
    assert p.degree() == 3
    assert p.degree(["y"]) == 1


def test_truncate_uses_absolute_exponents():
    p = LaurentPoly.monomial({"b": -2}) + LaurentPoly.monomial({"b": -1, "a": 4})
    assert p.truncate(["b"], 1) == LaurentPoly.monomial({"b": -1, "a": 4})


def test_substitute_merges_variables():
    p = LaurentPoly.monomial({"x1": 1, "x2": 1})
    assert p.substitute({"x2": "x1"}) == LaurentPoly.monomial({"x1": 2})


def test_as_expr():
    p = LaurentPoly.monomial({"x1": 1, "x2": -1}) + 2
    s1, s2 = sympy.symbols("x1 x2")
    assert sympy.simplify(p.as_expr() - (s1 / s2 + 2)) == 0


def test_json_format():
    p = LaurentPoly.monomial({"x1": 1, "x2": -1}) + 2
    assert p.to_json() == {
        "terms": [
            {"exps": {}, "coef": 2},
            {"exps": {"x1": 1, "x2": -1}, "coef": 1},
        ]
    }
    assert LaurentPoly.from_json(p.to_json()) == p

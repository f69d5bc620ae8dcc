"""Sparse Laurent polynomials with integer coefficients over named variables."""

from typing import Dict, Iterable, Mapping, Optional, Tuple

import sympy

# sorted ((variable, exponent), ...) with no zero exponents
Monomial = Tuple[Tuple[str, int], ...]


def _monomial(exponents: Mapping[str, int]) -> Monomial:
    return tuple(sorted((v, e) for v, e in exponents.items() if e != 0))


def _times(a: Monomial, b: Monomial) -> Monomial:
    out: Dict[str, int] = dict(a)
    for v, e in b:
        out[v] = out.get(v, 0) + e
    return _monomial(out)


class LaurentPoly:
    """
    Integer combination of monomials x^a with a in Z^vars.

    The coefficients are stored in `terms`, a dict keyed by monomial:

        {(("x1", 1), ("x2", -1)): 1, (): 2}

    reads x1*x2**-1 + 2.
    """

    def __init__(self, terms: Optional[Mapping[Monomial, int]] = None):
        self.terms: Dict[Monomial, int] = {m: c for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({(): 1})

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({(): c})

    @classmethod
    def monomial(cls, exponents: Mapping[str, int], coefficient: int = 1) -> "LaurentPoly":
        return cls({_monomial(exponents): coefficient})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "LaurentPoly":
        return cls.monomial({name: power})

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return LaurentPoly(terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + -other

    def __rsub__(self, other) -> "LaurentPoly":
        return -self + other

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[Monomial, int] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                m = _times(a, b)
                terms[m] = terms.get(m, 0) + ca * cb
        return LaurentPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have negative powers")
            ((m, c),) = self.terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials have negative powers")
            return LaurentPoly({tuple((v, e * k) for v, e in m): c ** (-k)})
        out = LaurentPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exponents: Mapping[str, int]) -> int:
        return self.terms.get(_monomial(exponents), 0)

    def variables(self) -> Tuple[str, ...]:
        return tuple(sorted({v for m in self.terms for v, _ in m}))

    def degree(self, names: Optional[Iterable[str]] = None) -> int:
        """Largest total |exponent| over `names` (all variables by default)."""
        names = set(names) if names is not None else None
        return max(
            (sum(abs(e) for v, e in m if names is None or v in names) for m in self.terms),
            default=0,
        )

    def truncate(self, names: Iterable[str], max_degree: int) -> "LaurentPoly":
        """Drops the monomials whose total |exponent| over `names` exceeds `max_degree`."""
        names = set(names)
        return LaurentPoly(
            {
                m: c
                for m, c in self.terms.items()
                if sum(abs(e) for v, e in m if v in names) <= max_degree
            }
        )

    def substitute(self, renames: Mapping[str, str]) -> "LaurentPoly":
        """Renames variables; monomials that collide are multiplied together."""
        out = LaurentPoly()
        for m, c in self.terms.items():
            exponents: Dict[str, int] = {}
            for v, e in m:
                name = renames.get(v, v)
                exponents[name] = exponents.get(name, 0) + e
            out = out + LaurentPoly.monomial(exponents, c)
        return out

    def as_expr(self) -> sympy.Expr:
        symbols: Dict[str, sympy.Symbol] = {}
        expr = sympy.Integer(0)
        for m, c in self.terms.items():
            term = sympy.Integer(c)
            for v, e in m:
                sym = symbols.setdefault(v, sympy.Symbol(v))
                term = term * sym**e
            expr = expr + term
        return expr

    def to_json(self) -> dict:
        return {
            "terms": [
                {"exps": dict(m), "coef": c} for m, c in sorted(self.terms.items())
            ]
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "LaurentPoly":
        out = cls()
        for term in data.get("terms", []):
            out = out + cls.monomial(term.get("exps", {}), term["coef"])
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({self.as_expr()})"


def det(matrix) -> LaurentPoly:
    """Determinant by cofactor expansion along the first row."""
    n = len(matrix)
    if n == 0:
        return LaurentPoly.one()
    if n == 1:
        return LaurentPoly.one() * matrix[0][0]
    total = LaurentPoly.zero()
    for j in range(n):
        entry = matrix[0][j]
        if entry == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        term = entry * det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def det_sympy(matrix) -> sympy.Expr:
    """Independent determinant through sympy, for cross-checking `det`."""
    rows = [[e.as_expr() if isinstance(e, LaurentPoly) else e for e in row] for row in matrix]
    return sympy.expand(sympy.Matrix(rows).det())


def same(a: LaurentPoly, expr: sympy.Expr) -> bool:
    return sympy.expand(a.as_expr() - expr) == 0

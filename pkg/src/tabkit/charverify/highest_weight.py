"""Highest weights Lambda(lam) of the Fock space components, and their tableaux."""

from typing import Dict, List, Literal

import sympy
from pydantic import BaseModel, Field

from tabkit.abtableau import ABTableau, character_ab, validate_ab
from tabkit.alphabet import (
    GradedAlphabet,
    half_label,
    half_nonpos_prime,
    half_pos_prime,
    znonpos,
    zpos,
)
from tabkit.exception import NotCanonical
from tabkit.laurent import LaurentPoly
from tabkit.shape import GeneralizedPartition, Partition, as_generalized
from tabkit.tableau import Tableau

Mode = Literal["super", "gl"]


class HighestWeight(BaseModel):
    """Values on e_kk keyed by the label of k (integers and halves), plus the central charge."""

    diag: Dict[str, int] = Field(default_factory=dict)
    central: int

    def to_json(self) -> dict:
        return self.model_dump()


def _put(diag: Dict[str, int], k, value: int) -> None:
    if value:
        diag[half_label(k)] = value


def highest_weight_super(lam) -> HighestWeight:
    lam = as_generalized(lam)
    n = lam.level
    half = sympy.Rational(1, 2)
    diag: Dict[str, int] = {}
    top = max(lam.parts[0], 0) if n else 0
    for k in range(1, top + 1):
        _put(diag, k, max(lam.column_length(k) - k, 0))
    bottom = max(-lam.last(), 0) if n else 0
    for k in range(0, -bottom - 1, -1):
        _put(diag, k, -max(lam.column_length(k - 1) + k, 0))
    for i in range(n):
        k = i + half
        _put(diag, k, max(lam.parts[i] - i, 0))
        # k = -1/2 - i reads the part lam_{n-i}
        _put(diag, -k, -max(-lam.parts[n - 1 - i] - i - 1, 0))
    return HighestWeight(diag=diag, central=n)


def highest_weight_gl(lam) -> HighestWeight:
    lam = as_generalized(lam)
    n = lam.level
    diag: Dict[str, int] = {}
    for i, part in enumerate(lam.parts, start=1):
        if part > 0:
            _put(diag, i, part)
        elif part < 0:
            _put(diag, i - n, part)
    return HighestWeight(diag=diag, central=-n)


def alphabets(mode: Mode, truncation: int):
    """(A, B) for the super or gl realization, truncated to `truncation` letters each."""
    if mode == "super":
        return half_pos_prime(truncation), half_nonpos_prime(truncation)
    return zpos(truncation), znonpos(truncation)


def _frame(lam: GeneralizedPartition):
    d = max(0, -lam.last())
    inner = Partition([d - max(0, -p) for p in lam.parts])
    return d, inner


def _ab_from_rows(
    lam: GeneralizedPartition,
    plus: List[List[str]],
    minus: List[List[str]],
    a: GradedAlphabet,
    b: GradedAlphabet,
) -> ABTableau:
    d, inner = _frame(lam)

    def cells(alphabet: GradedAlphabet, rows: List[List[str]]):
        return {
            (i, inner.part(i) + j): alphabet.letter(x)
            for i, row in enumerate(rows)
            for j, x in enumerate(row)
        }

    tplus = Tableau.from_cells(a, [p + d for p in lam.parts], inner, cells(a, plus))
    tminus = Tableau.from_cells(b, [d] * lam.level, inner, cells(b, minus))
    x = ABTableau(shape=lam, d=d, mu=inner, tplus=tplus, tminus=tminus)
    if not validate_ab(x):
        raise NotCanonical(f"highest weight filling of {lam} is not semistandard")
    return x


def highest_weight_tableau(lam) -> ABTableau:
    """T^lam over (1/2 Z>0)' and (1/2 Z<=0)': the tableau of the highest weight vector."""
    lam = as_generalized(lam)
    n = lam.level
    half = sympy.Rational(1, 2)
    plus, minus = [], []
    for i, part in enumerate(lam.parts, start=1):
        plus.append([sympy.Integer(j) if j < i else i - half for j in range(1, part + 1)])
        # signed columns -m .. -1, left to right
        minus.append(
            [
                -sympy.Integer(j - 1) if j <= n + 1 - i else -(n - i) - half
                for j in range(-part, 0, -1)
            ]
        )
    top = max((v for row in plus for v in row), default=half)
    low = min((v for row in minus for v in row), default=sympy.Integer(0))
    a = half_pos_prime(max(int(2 * top), 1))
    b = half_nonpos_prime(int(-2 * low) + 1)
    return _ab_from_rows(
        lam,
        [[half_label(v) for v in row] for row in plus],
        [[half_label(v) for v in row] for row in minus],
        a,
        b,
    )


def highest_weight_tableau_gl(lam) -> ABTableau:
    """T^lam over Z>0 and Z<=0: row i of T+ holds i, row i of T- holds i - n."""
    lam = as_generalized(lam)
    n = lam.level
    plus = [[str(i)] * max(p, 0) for i, p in enumerate(lam.parts, start=1)]
    minus = [[str(i - n)] * max(-p, 0) for i, p in enumerate(lam.parts, start=1)]
    return _ab_from_rows(lam, plus, minus, zpos(max(n, 1)), znonpos(max(n, 1)))


def weight_matches(x: ABTableau, hw: HighestWeight) -> bool:
    """wt(T) read as a diagonal weight: A-letters count up, B-letters count down."""
    weight = x.weight()
    diag = {lb: k for lb, k in weight.plus.items() if k}
    for lb, k in weight.minus.items():
        if k:
            diag[lb] = diag.get(lb, 0) - k
    return diag == hw.diag


def super_character_window(
    lam, truncation: int, window: int, mode: Mode = "super"
) -> LaurentPoly:
    """ch L(Lambda(lam)) as S_lam over the mode's alphabets, exact up to B-degree `window`."""
    a, b = alphabets(mode, truncation)
    return character_ab(lam, a, b, window)

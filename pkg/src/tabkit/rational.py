"""Rational [n]-semistandard tableaux, the sigma shift and rectangular complements."""

import logging
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from tabkit.alphabet import GradedAlphabet, interval
from tabkit.exception import RectangleTooSmall, ShapeMismatch
from tabkit.insertion import col_insert_tableau, row_insert_tableau
from tabkit.laurent import LaurentPoly
from tabkit.shape import GeneralizedPartition, Partition, as_generalized
from tabkit.tableau import Tableau, enumerate_sst


class RationalTableau(BaseModel):
    """A filling of the generalized diagram of `shape` by entries of [n] and [-n].

    `rows[i]` lists the entries of row i from left to right: columns 1..p for a
    positive part p, columns p..-1 for a negative one.
    """

    model_config = ConfigDict(frozen=True)

    shape: GeneralizedPartition
    rows: Tuple[Tuple[int, ...], ...] = Field(default=())

    @model_validator(mode="after")
    def _check_cells(self) -> "RationalTableau":
        if len(self.rows) != self.shape.level:
            raise ShapeMismatch(f"{len(self.rows)} rows for level {self.shape.level}")
        for i, (row, p) in enumerate(zip(self.rows, self.shape.parts)):
            if len(row) != abs(p):
                raise ShapeMismatch(f"row {i} holds {len(row)} entries, part is {p}")
        return self

    @property
    def level(self) -> int:
        return self.shape.level

    @classmethod
    def of(cls, parts: Sequence[int], rows: Sequence[Sequence[int]]) -> "RationalTableau":
        return cls(shape=as_generalized(parts), rows=tuple(tuple(r) for r in rows))

    def column(self, k: int) -> List[int]:
        """Entries of signed column k, top to bottom."""
        out = []
        for row, p in zip(self.rows, self.shape.parts):
            if 0 < k <= p:
                out.append(row[k - 1])
            elif p <= k < 0:
                out.append(row[len(row) + k])
        return out

    def columns(self) -> Dict[int, List[int]]:
        return {k: self.column(k) for k in sorted(self._column_indices())}

    def _column_indices(self) -> List[int]:
        top = max(self.shape.parts, default=0)
        bottom = min(self.shape.parts, default=0)
        return [k for k in range(bottom, top + 1) if k != 0]

    def validate(self) -> bool:
        n = self.level
        for row, p in zip(self.rows, self.shape.parts):
            if p > 0 and any(not 1 <= x <= n for x in row):
                return False
            if p < 0 and any(not -n <= x <= -1 for x in row):
                return False
            if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
                return False
        for k in self._column_indices():
            col = self.column(k)
            if any(col[j] >= col[j + 1] for j in range(len(col) - 1)):
                return False
        first = self.column(1)
        removed = {-x for x in self.column(-1)}
        rest = [x for x in range(1, n + 1) if x not in removed]
        return all(rest[i] <= b for i, b in enumerate(first))

    def weight(self) -> Dict[int, int]:
        """Signed content m_k - m_{-k}, keyed by k in [n]."""
        out = {k: 0 for k in range(1, self.level + 1)}
        for row in self.rows:
            for x in row:
                out[abs(x)] += 1 if x > 0 else -1
        return out

    def monomial(self, prefix: str = "x") -> LaurentPoly:
        return LaurentPoly.monomial({f"{prefix}{k}": m for k, m in self.weight().items()})

    def render_ascii(self) -> str:
        """Rows drawn around the vertical line between columns -1 and 1."""
        left = max((max(0, -p) for p in self.shape.parts), default=0)
        width = max((len(str(x)) for row in self.rows for x in row), default=1)
        lines = []
        for row, p in zip(self.rows, self.shape.parts):
            neg = [str(x).rjust(width) for x in row] if p < 0 else []
            pos = [str(x).rjust(width) for x in row] if p > 0 else []
            pad = [" " * width] * (left - len(neg))
            lines.append(" ".join(pad + neg + ["|"] + pos).rstrip())
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "parts": list(self.shape.parts),
            "columns": {str(k): v for k, v in self.columns().items()},
        }

    @classmethod
    def from_json(cls, data: dict) -> "RationalTableau":
        parts = data["parts"]
        columns = {int(k): v for k, v in data.get("columns", {}).items()}
        rows: List[List[int]] = [[] for _ in parts]
        counters: Dict[int, int] = {}
        for i, p in enumerate(parts):
            cols = list(range(p, 0)) if p < 0 else list(range(1, p + 1))
            for k in cols:
                j = counters.get(k, 0)
                rows[i].append(columns[k][j])
                counters[k] = j + 1
        return cls.of(parts, rows)


def validate_rational(t: RationalTableau) -> bool:
    return t.validate()


def from_tableau(t: Tableau, n: Optional[int] = None) -> RationalTableau:
    """An ordinary straight tableau over an n-letter alphabet, read through ranks."""
    n = len(t.alphabet) if n is None else n
    rank = t.alphabet.rank
    return RationalTableau.of(
        t.outer.pad(n), [[rank(x) + 1 for x in row] for row in t.rows] + [[]] * (n - len(t.rows))
    )


def to_tableau(t: RationalTableau, alphabet: Optional[GradedAlphabet] = None) -> Tableau:
    if not t.shape.is_partition():
        raise ShapeMismatch(f"{t.shape} has negative parts")
    alphabet = alphabet or interval(t.level)
    parts = t.shape.to_partition()
    return Tableau(
        alphabet=alphabet,
        outer=parts,
        rows=tuple(tuple(alphabet.letters[x - 1] for x in row) for row in t.rows[: len(parts)]),
    )


def sigma(t: RationalTableau) -> RationalTableau:
    """Turns the -1st column into a new first column of the complementary entries."""
    n = t.level
    removed = {-x for x in t.column(-1)}
    added = [x for x in range(1, n + 1) if x not in removed]
    rows = []
    for i, (row, p) in enumerate(zip(t.rows, t.shape.parts)):
        if p < 0:
            rows.append(row[:-1])
        else:
            rows.append((added[i],) + row)
    return RationalTableau(shape=t.shape.add_rect(1), rows=tuple(rows))


def sigma_inv(t: RationalTableau) -> RationalTableau:
    n = t.level
    first = t.column(1)
    s = len(first)
    kept = sorted((x for x in range(1, n + 1) if x not in set(first)), reverse=True)
    rows = []
    for i, (row, p) in enumerate(zip(t.rows, t.shape.parts)):
        if p > 0:
            rows.append(row[1:])
        else:
            rows.append(row + (-kept[i - s],))
    return RationalTableau(shape=t.shape.add_rect(-1), rows=tuple(rows))


def sigma_pow(t: RationalTableau, k: int) -> RationalTableau:
    step = sigma if k >= 0 else sigma_inv
    for _ in range(abs(k)):
        t = step(t)
    return t


def delta(t: Tableau, k: int, n: Optional[int] = None) -> Tableau:
    """Complement of T in the (k^n) rectangle: sigma^{-k}, rotated, entries made positive."""
    n = len(t.alphabet) if n is None else n
    if t.outer.part(0) > k:
        raise RectangleTooSmall(f"k={k} is smaller than the first part of {t.outer}")
    if len(t.outer) > n:
        raise ShapeMismatch(f"{t.outer} has more than {n} rows")
    low = sigma_pow(from_tableau(t, n), -k)
    rows = [tuple(-x for x in reversed(row)) for row in reversed(low.rows)]
    parts = Partition([len(r) for r in rows])
    return Tableau(
        alphabet=t.alphabet,
        outer=parts,
        rows=tuple(tuple(t.alphabet.letters[x - 1] for x in row) for row in rows[: len(parts)]),
    )


def delta_swapped(t: Tableau, d: int, m: int) -> Tableau:
    """transpose(delta^d_m(T)) for T over a d-letter alphabet with at most m columns."""
    return delta(t, m, d).transpose()


def undo_delta_swapped(u: Tableau, d: int, m: int) -> Tableau:
    return delta(u.transpose(), m, d)


def check_stroomer(t1: Tableau, t2: Tableau, p: int, q: int) -> bool:
    """delta_{p+q}(T2 -> T1) == (delta_p(T1) <- delta_q(T2))."""
    n = len(t1.alphabet)
    left = delta(row_insert_tableau(t2, t1).result, p + q, n)
    right = col_insert_tableau(delta(t1, p, n), delta(t2, q, n)).result
    if left != right:
        logging.warning(f"Complement insertion mismatch for p={p}, q={q}")
    return left == right


def _from_parts(shape: GeneralizedPartition, plus: Tableau, minus: Tableau) -> RationalTableau:
    n = shape.level
    rows: List[Tuple[int, ...]] = []
    for i, p in enumerate(shape.parts):
        if p > 0:
            rows.append(tuple(int(x.label) for x in plus.rows[i]))
        elif p < 0:
            # the negative rows, rotated by 180 degrees
            j = n - 1 - i
            rows.append(tuple(-int(x.label) for x in reversed(minus.rows[j])))
        else:
            rows.append(())
    return RationalTableau(shape=shape, rows=tuple(rows))


def enumerate_rational(shape, n: Optional[int] = None) -> Iterator[RationalTableau]:
    """All of SST_[n](shape): pairs of ordinary tableaux glued along the vertical line."""
    shape = as_generalized(shape)
    if n is not None and n != shape.level:
        raise ShapeMismatch(f"level {shape.level} does not match n={n}")
    n = shape.level
    plus, minus = shape.plus_minus()
    alphabet = interval(n)
    minus_fillings = list(enumerate_sst(alphabet, minus))
    for p in enumerate_sst(alphabet, plus):
        for m in minus_fillings:
            t = _from_parts(shape, p, m)
            if t.validate():
                yield t


def rational_schur(shape, n: Optional[int] = None, prefix: str = "x") -> LaurentPoly:
    shape = as_generalized(shape)
    total = LaurentPoly.zero()
    count = 0
    for t in enumerate_rational(shape, n):
        total = total + t.monomial(prefix)
        count += 1
    logging.debug(f"s_{shape} has {count} tableaux")
    return total


def kostka(shape, content: Sequence[int]) -> int:
    """Number of rational tableaux of `shape` with signed content `content`."""
    shape = as_generalized(shape)
    if len(content) != shape.level:
        raise ShapeMismatch(f"content {tuple(content)} does not have {shape.level} entries")
    if sum(content) != shape.charge:
        return 0
    target = {k + 1: c for k, c in enumerate(content)}
    return sum(1 for t in enumerate_rational(shape) if t.weight() == target)


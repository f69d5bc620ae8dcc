"""Semistandard tableaux over graded alphabets."""

import logging
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from tabkit.alphabet import GradedAlphabet, Letter
from tabkit.exception import AlphabetMismatch, ShapeMismatch
from tabkit.shape import Cell, Partition, PartitionLike, SkewShape, as_partition

Word = List[Letter]


class Tableau(BaseModel):
    """A filling of the skew diagram outer/inner by letters of `alphabet`.

    Rows are stored relative to the inner shape: `rows[r]` holds the cells
    `(r, inner[r]) .. (r, outer[r] - 1)`. Cells are addressed 0-based.
    """

    model_config = ConfigDict(frozen=True)

    alphabet: GradedAlphabet
    outer: Partition = Field(default_factory=Partition)
    inner: Partition = Field(default_factory=Partition)
    rows: Tuple[Tuple[Letter, ...], ...] = ()

    @model_validator(mode="after")
    def _check_shape(self) -> "Tableau":
        if not self.outer.contains(self.inner):
            raise ShapeMismatch(f"{self.inner} is not contained in {self.outer}")
        if len(self.rows) != len(self.outer):
            raise ShapeMismatch(
                f"{len(self.rows)} rows given for outer shape {self.outer} / {self.inner}"
            )
        for r, row in enumerate(self.rows):
            if len(row) != self.outer.part(r) - self.inner.part(r):
                raise ShapeMismatch(
                    f"row {r} holds {len(row)} cells, shape {self.outer}/{self.inner} needs "
                    f"{self.outer.part(r) - self.inner.part(r)}"
                )
            for letter in row:
                if letter not in self.alphabet:
                    raise AlphabetMismatch(f"{letter!r} is not a letter of {self.alphabet.name}")
        return self

    @classmethod
    def from_rows(
        cls,
        alphabet: GradedAlphabet,
        rows: Sequence[Sequence[str]],
        inner: PartitionLike = (),
    ) -> "Tableau":
        """Builds a tableau from rows of labels; `inner` cells are omitted from `rows`."""
        inner = as_partition(inner)
        rows = [list(row) for row in rows]
        while len(rows) < len(inner):
            rows.append([])
        outer = [inner.part(r) + len(row) for r, row in enumerate(rows)]
        while outer and outer[-1] == 0:
            outer.pop()
        return cls(
            alphabet=alphabet,
            outer=Partition(outer),
            inner=inner,
            rows=tuple(tuple(alphabet.letter(lb) for lb in row) for row in rows[: len(outer)]),
        )

    @classmethod
    def from_cells(
        cls,
        alphabet: GradedAlphabet,
        outer: PartitionLike,
        inner: PartitionLike,
        cells: Dict[Cell, Letter],
    ) -> "Tableau":
        outer, inner = as_partition(outer), as_partition(inner)
        try:
            rows = tuple(
                tuple(cells[(r, c)] for c in range(inner.part(r), outer.part(r)))
                for r in range(len(outer))
            )
        except KeyError as e:
            raise ShapeMismatch(f"cell {e.args[0]} of {outer}/{inner} is not filled")
        if len(cells) != SkewShape(outer=outer, inner=inner).size:
            raise ShapeMismatch(f"cells outside {outer}/{inner} were given")
        return cls(alphabet=alphabet, outer=outer, inner=inner, rows=rows)

    @classmethod
    def empty(cls, alphabet: GradedAlphabet, shape: PartitionLike = ()) -> "Tableau":
        """The empty filling of shape/shape."""
        shape = as_partition(shape)
        return cls(alphabet=alphabet, outer=shape, inner=shape, rows=((),) * len(shape))

    @property
    def shape(self) -> SkewShape:
        return SkewShape(outer=self.outer, inner=self.inner)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def is_straight(self) -> bool:
        return not self.inner.parts

    def is_empty(self) -> bool:
        return self.size == 0

    def entry(self, r: int, c: int) -> Optional[Letter]:
        if r < 0 or r >= len(self.rows):
            return None
        c0 = self.inner.part(r)
        if c0 <= c < self.outer.part(r):
            return self.rows[r][c - c0]
        return None

    def cells(self) -> Dict[Cell, Letter]:
        return {
            (r, self.inner.part(r) + k): letter
            for r, row in enumerate(self.rows)
            for k, letter in enumerate(row)
        }

    def to_rows(self) -> List[List[str]]:
        return [[letter.label for letter in row] for row in self.rows]

    def validate(self) -> bool:
        """Rows and columns weakly increase; parity 0 strict in columns, parity 1 in rows."""
        rank = self.alphabet.rank
        for (r, c), x in self.cells().items():
            right = self.entry(r, c + 1)
            if right is not None:
                if rank(right) < rank(x) or (right == x and x.parity == 1):
                    return False
            below = self.entry(r + 1, c)
            if below is not None:
                if rank(below) < rank(x) or (below == x and x.parity == 0):
                    return False
        return True

    def word_col(self) -> Word:
        """Columns from right to left, each read top to bottom."""
        cells = self.cells()
        width = self.outer.part(0)
        word = []
        for c in range(width - 1, -1, -1):
            for r in range(len(self.rows)):
                if (r, c) in cells:
                    word.append(cells[(r, c)])
        return word

    def word_row(self) -> Word:
        """Rows from bottom to top, each read left to right."""
        return [letter for row in reversed(self.rows) for letter in row]

    def weight(self) -> Dict[str, int]:
        """Multiplicity of each letter, in alphabet order."""
        counts: Dict[str, int] = {}
        for row in self.rows:
            for letter in row:
                counts[letter.label] = counts.get(letter.label, 0) + 1
        return {lb: counts[lb] for lb in sorted(counts, key=self.alphabet.rank)}

    def transpose(self) -> "Tableau":
        """Reflection in the main diagonal, over the primed alphabet."""
        alphabet = self.alphabet.prime()
        cells = {(c, r): alphabet.letter(x.label) for (r, c), x in self.cells().items()}
        return Tableau.from_cells(
            alphabet, self.outer.conjugate(), self.inner.conjugate(), cells
        )

    def rotate(self, rows: Optional[int] = None, cols: Optional[int] = None) -> "Tableau":
        """180 degree rotation inside the rows x cols box, over the reversed alphabet."""
        rows = len(self.outer) if rows is None else rows
        cols = self.outer.part(0) if cols is None else cols
        if len(self.outer) > rows or self.outer.part(0) > cols:
            raise ShapeMismatch(f"{self.outer} does not fit in a {rows}x{cols} box")
        outer = [cols - self.inner.part(rows - 1 - i) for i in range(rows)]
        inner = [cols - self.outer.part(rows - 1 - i) for i in range(rows)]
        cells = {(rows - 1 - r, cols - 1 - c): x for (r, c), x in self.cells().items()}
        # keep only the rows that carry cells of the rotated outer shape
        while outer and outer[-1] == 0:
            outer.pop()
        return Tableau.from_cells(self.alphabet.pi(), outer, inner[: len(outer)], cells)

    def sharp_t(self, rows: Optional[int] = None, cols: Optional[int] = None) -> "Tableau":
        """Transpose, then rotate inside the (transposed) rows x cols box."""
        return self.transpose().rotate(rows, cols)

    def restrict(self, sub: GradedAlphabet) -> "Tableau":
        """The cells whose letters lie in `sub`; they must form a skew shape.

        `sub` is expected to be an interval of the alphabet order, as the parts of
        a glued tableau are.
        """
        if not len(sub):
            return Tableau.empty(sub)
        rank = self.alphabet.rank
        floor = min(rank(lb) for lb in sub.labels())
        inner, outer, rows = [], [], []
        for r, row in enumerate(self.rows):
            before = sum(1 for x in row if rank(x) < floor)
            picked = tuple(sub.letter(x.label) for x in row if x.label in sub)
            if any(x.label not in sub for x in row[before : before + len(picked)]):
                raise ShapeMismatch(f"letters of {sub.name} are not contiguous in row {r}")
            start = self.inner.part(r) + before
            inner.append(start)
            outer.append(start + len(picked))
            rows.append(picked)
        while outer and outer[-1] == 0:
            outer.pop()
            inner.pop()
            rows.pop()
        try:
            return Tableau(
                alphabet=sub, outer=Partition(outer), inner=Partition(inner), rows=tuple(rows)
            )
        except ShapeMismatch as e:
            raise ShapeMismatch(f"letters of {sub.name} do not form a skew shape: {e}")

    def relabel(
        self, target: GradedAlphabet, mapping: Optional[Dict[str, str]] = None
    ) -> "Tableau":
        """Moves every letter to `target`, by label map or else by rank."""
        if mapping is None:
            rank = self.alphabet.rank
            top = max((rank(x) for row in self.rows for x in row), default=-1)
            if top >= len(target):
                raise AlphabetMismatch(f"{target.name} has no letter of rank {top}")
            rows = tuple(tuple(target.letters[rank(x)] for x in row) for row in self.rows)
        else:
            rows = tuple(tuple(target.letter(mapping[x.label]) for x in row) for row in self.rows)
        return Tableau(alphabet=target, outer=self.outer, inner=self.inner, rows=rows)

    def shift_columns(self, k: int, n: Optional[int] = None) -> "Tableau":
        """Moves every cell k columns to the right in an n-row frame (k may be negative)."""
        n = len(self.outer) if n is None else n
        outer = [p + k for p in self.outer.pad(n)]
        inner = [p + k for p in self.inner.pad(n)]
        if min(inner, default=0) < 0:
            raise ShapeMismatch(f"cannot shift {self.outer}/{self.inner} by {k}")
        rows = list(self.rows) + [()] * (n - len(self.rows))
        while outer and outer[-1] == 0:
            outer.pop()
            inner.pop()
            rows.pop()
        return Tableau(
            alphabet=self.alphabet,
            outer=Partition(outer),
            inner=Partition(inner),
            rows=tuple(rows),
        )

    def unshift_columns(self, k: int, n: Optional[int] = None) -> "Tableau":
        """Moves every cell k columns to the left; the inverse of shift_columns(k, n)."""
        return self.shift_columns(-k, n)

    def render_ascii(self) -> str:
        width = max((len(x.label) for row in self.rows for x in row), default=1)
        lines = []
        for r, row in enumerate(self.rows):
            cells = ["·".rjust(width)] * self.inner.part(r) + [x.label.rjust(width) for x in row]
            lines.append(" ".join(cells))
        return "\n".join(lines) if lines else "∅"

    def to_json(self) -> dict:
        return {
            "alphabet": self.alphabet.to_json(),
            "outer": list(self.outer.parts),
            "inner": list(self.inner.parts),
            "rows": self.to_rows(),
        }

    @classmethod
    def from_json(cls, data: dict, alphabet: Optional[GradedAlphabet] = None) -> "Tableau":
        alphabet = alphabet or GradedAlphabet.from_json(data["alphabet"])
        return cls.from_rows(alphabet, data.get("rows", []), data.get("inner", ()))


def glue(s: Tableau, t: Tableau) -> Tableau:
    """S*T over the concatenated alphabet; S fills t.inner."""
    if s.outer != t.inner:
        raise ShapeMismatch(f"cannot glue: {s.outer} differs from inner shape {t.inner}")
    alphabet = s.alphabet.concat(t.alphabet)
    rows = []
    for r in range(len(t.outer)):
        left = s.rows[r] if r < len(s.rows) else ()
        rows.append(tuple(left) + tuple(t.rows[r]))
    return Tableau(alphabet=alphabet, outer=t.outer, inner=s.inner, rows=tuple(rows))


def enumerate_sst(
    alphabet: GradedAlphabet, outer: PartitionLike, inner: PartitionLike = ()
) -> Iterator[Tableau]:
    """All semistandard fillings of outer/inner, filled column by column."""
    outer, inner = as_partition(outer), as_partition(inner)
    shape = SkewShape(outer=outer, inner=inner)
    order = sorted(shape.cells(), key=lambda cell: (cell[1], cell[0]))
    letters = alphabet.letters
    filled: Dict[Cell, int] = {}
    logging.debug(f"Enumerating SST over {alphabet.name} of shape {outer}/{inner}")

    def rec(pos: int) -> Iterator[Tableau]:
        if pos == len(order):
            cells = {cell: letters[k] for cell, k in filled.items()}
            yield Tableau.from_cells(alphabet, outer, inner, cells)
            return
        r, c = order[pos]
        low = 0
        left = filled.get((r, c - 1))
        if left is not None:
            low = left + (1 if letters[left].parity == 1 else 0)
        above = filled.get((r - 1, c))
        if above is not None:
            low = max(low, above + (1 if letters[above].parity == 0 else 0))
        for k in range(low, len(letters)):
            filled[(r, c)] = k
            yield from rec(pos + 1)
        filled.pop((r, c), None)

    yield from rec(0)

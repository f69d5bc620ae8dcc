"""Column and row bumping for graded alphabets, with recording tableaux and inverses."""

import logging
from typing import Dict, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from tabkit.alphabet import GradedAlphabet, Letter, interval, naturals, naturals_prime
from tabkit.exception import InverseMismatch, NotHorizontalStrip, ShapeMismatch
from tabkit.shape import Cell, Partition, SkewShape
from tabkit.tableau import Tableau

Grid = List[List[int]]


class InsertionResult(BaseModel):
    """Result of inserting one tableau into another, with its recording tableau."""

    model_config = ConfigDict(frozen=True)

    result: Tableau
    recording: Tableau


def lr_alphabet(length: int) -> GradedAlphabet:
    """Alphabet of LR and recording tableaux whose content has `length` parts."""
    return naturals(max(length, 1))


def _grid(t: Tableau) -> Grid:
    if not t.is_straight():
        raise ShapeMismatch(f"insertion needs a straight shape, got {t.outer}/{t.inner}")
    rank = t.alphabet.rank
    return [[rank(x) for x in row] for row in t.rows]


def _tableau(alphabet: GradedAlphabet, grid: Grid) -> Tableau:
    rows = [row for row in grid]
    while rows and not rows[-1]:
        rows.pop()
    return Tableau(
        alphabet=alphabet,
        outer=Partition([len(row) for row in rows]),
        rows=tuple(tuple(alphabet.letters[k] for k in row) for row in rows),
    )


def _shape_of(cells: Dict[Cell, int]) -> Partition:
    rows: Dict[int, int] = {}
    for r, c in cells:
        rows[r] = max(rows.get(r, 0), c + 1)
    return Partition([rows.get(r, 0) for r in range(max(rows, default=-1) + 1)])


def _column(grid: Grid, c: int) -> List[int]:
    return [row[c] for row in grid if len(row) > c]


def _col_bump(grid: Grid, a: int, letters: Sequence[Letter]) -> Cell:
    """Column-inserts rank `a`; parity 0 letters bump the topmost entry >= a, parity 1 > a."""
    c = 0
    while True:
        col = _column(grid, c)
        strict = letters[a].parity == 1
        for r, x in enumerate(col):
            if x > a or (x == a and not strict):
                grid[r][c], a = a, x
                break
        else:
            r = len(col)
            if r == len(grid):
                grid.append([])
            grid[r].append(a)
            return r, c
        c += 1


def _row_bump(grid: Grid, a: int, letters: Sequence[Letter]) -> Cell:
    """Row-inserts rank `a`; parity 0 letters bump the leftmost entry > a, parity 1 >= a."""
    r = 0
    while True:
        if r == len(grid):
            grid.append([])
        row = grid[r]
        weak = letters[a].parity == 1
        for c, x in enumerate(row):
            if x > a or (x == a and weak):
                row[c], a = a, x
                break
        else:
            row.append(a)
            return r, len(row) - 1
        r += 1


def _col_unbump(grid: Grid, cell: Cell, letters: Sequence[Letter]) -> int:
    """Removes the corner `cell` and reverses the column bumping that created it."""
    r, c = cell
    if r >= len(grid) or len(grid[r]) != c + 1 or (r + 1 < len(grid) and len(grid[r + 1]) > c):
        raise InverseMismatch(f"cell {cell} is not a removable corner")
    a = grid[r].pop()
    while c > 0:
        c -= 1
        col = _column(grid, c)
        strict = letters[a].parity == 1
        eligible = [i for i, x in enumerate(col) if x < a or (x == a and not strict)]
        if not eligible:
            raise InverseMismatch(f"no entry of column {c} can have bumped {letters[a].label}")
        i = eligible[-1]
        grid[i][c], a = a, grid[i][c]
    while grid and not grid[-1]:
        grid.pop()
    return a


def _row_unbump(grid: Grid, cell: Cell, letters: Sequence[Letter]) -> int:
    """Removes the corner `cell` and reverses the row bumping that created it."""
    r, c = cell
    if r >= len(grid) or len(grid[r]) != c + 1 or (r + 1 < len(grid) and len(grid[r + 1]) > c):
        raise InverseMismatch(f"cell {cell} is not a removable corner")
    a = grid[r].pop()
    while r > 0:
        r -= 1
        row = grid[r]
        weak = letters[a].parity == 1
        eligible = [j for j, x in enumerate(row) if x < a or (x == a and weak)]
        if not eligible:
            raise InverseMismatch(f"no entry of row {r} can have bumped {letters[a].label}")
        j = eligible[-1]
        row[j], a = a, row[j]
    while grid and not grid[-1]:
        grid.pop()
    return a


def col_insert_letter(t: Tableau, a: Letter) -> Tuple[Tableau, Cell]:
    """(T <- a) and the cell it created."""
    grid = _grid(t)
    cell = _col_bump(grid, t.alphabet.rank(a), t.alphabet.letters)
    return _tableau(t.alphabet, grid), cell


def row_insert_letter(a: Letter, t: Tableau) -> Tuple[Tableau, Cell]:
    """(a -> T) and the cell it created."""
    grid = _grid(t)
    cell = _row_bump(grid, t.alphabet.rank(a), t.alphabet.letters)
    return _tableau(t.alphabet, grid), cell


def _check_alphabets(t: Tableau, other: Tableau) -> None:
    if t.alphabet != other.alphabet:
        raise ShapeMismatch(f"alphabets differ: {t.alphabet.name} and {other.alphabet.name}")


def col_insert_tableau(t: Tableau, t2: Tableau) -> InsertionResult:
    """(T <- T') by column-inserting word_col(T'); new cells record the T' row of their letter."""
    _check_alphabets(t, t2)
    grid = _grid(t)
    _grid(t2)
    rank, letters = t.alphabet.rank, t.alphabet.letters
    cells = t2.cells()
    order = sorted(cells, key=lambda rc: (-rc[1], rc[0]))
    recorded: Dict[Cell, int] = {}
    for r, c in order:
        recorded[_col_bump(grid, rank(cells[(r, c)]), letters)] = r + 1
    return _result(t, grid, recorded, lr_alphabet(len(t2.outer)))


def row_insert_tableau(t2: Tableau, t: Tableau) -> InsertionResult:
    """(T' -> T) by row-inserting word_row(T'); new cells record the T' column of their letter."""
    _check_alphabets(t, t2)
    grid = _grid(t)
    _grid(t2)
    rank, letters = t.alphabet.rank, t.alphabet.letters
    cells = t2.cells()
    order = sorted(cells, key=lambda rc: (-rc[0], rc[1]))
    recorded: Dict[Cell, int] = {}
    for r, c in order:
        recorded[_row_bump(grid, rank(cells[(r, c)]), letters)] = c + 1
    return _result(t, grid, recorded, naturals_prime(max(t2.outer.part(0), 1)))


def _result(
    t: Tableau, grid: Grid, recorded: Dict[Cell, int], rec_alphabet: GradedAlphabet
) -> InsertionResult:
    result = _tableau(t.alphabet, grid)
    recording = Tableau.from_cells(
        rec_alphabet,
        result.outer,
        t.outer,
        {cell: rec_alphabet.letters[k - 1] for cell, k in recorded.items()},
    )
    logging.debug(f"Inserted {len(recorded)} letters into shape {t.outer} -> {result.outer}")
    return InsertionResult(result=result, recording=recording)


def _values(recording: Tableau) -> Dict[Cell, int]:
    return {cell: int(x.label) for cell, x in recording.cells().items()}


def _check_recording(s: Tableau, recording: Tableau) -> None:
    if recording.outer != s.outer:
        raise InverseMismatch(f"recording shape {recording.outer} differs from {s.outer}")
    if not recording.validate():
        raise InverseMismatch("recording tableau is not semistandard")


def rho_col(t: Tableau, t2: Tableau) -> Tuple[Tableau, Tableau]:
    """(T, T') -> ((T <- T'), its recording tableau)."""
    res = col_insert_tableau(t, t2)
    return res.result, res.recording


def rho_col_inv(s: Tableau, recording: Tableau) -> Tuple[Tableau, Tableau]:
    """Inverse of rho_col: recovers (T, T') from (T <- T') and its recording."""
    _check_recording(s, recording)
    values = _values(recording)
    # the j-th cell from the right among those recording k came from cell (k-1, j-1) of T'
    by_value: Dict[int, List[Cell]] = {}
    for cell, k in values.items():
        by_value.setdefault(k, []).append(cell)
    source: Dict[Cell, Cell] = {}
    for k, cells in by_value.items():
        for j, cell in enumerate(sorted(cells, key=lambda rc: -rc[1])):
            source[cell] = (k - 1, j)
    order = sorted(values, key=lambda cell: (-source[cell][1], source[cell][0]))
    grid = _grid(s)
    letters = s.alphabet.letters
    t2_cells = {}
    for cell in reversed(order):
        t2_cells[source[cell]] = letters[_col_unbump(grid, cell, letters)]
    t = _tableau(s.alphabet, grid)
    if t.outer != recording.inner:
        raise InverseMismatch(f"recovered shape {t.outer} differs from {recording.inner}")
    return t, _from_cell_map(s.alphabet, t2_cells)


def rho_row(t: Tableau, t2: Tableau) -> Tuple[Tableau, Tableau]:
    """(T, T') -> ((T' -> T), transposed recording tableau over N)."""
    res = row_insert_tableau(t2, t)
    return res.result, res.recording.transpose()


def rho_row_inv(s: Tableau, recording_t: Tableau) -> Tuple[Tableau, Tableau]:
    """Inverse of rho_row; `recording_t` is the transposed recording returned by rho_row."""
    recording = recording_t.transpose()
    _check_recording(s, recording)
    values = _values(recording)
    # the j-th cell from the bottom among those recording k came from cell (j-1, k-1) of T'
    by_value: Dict[int, List[Cell]] = {}
    for cell, k in values.items():
        by_value.setdefault(k, []).append(cell)
    source: Dict[Cell, Cell] = {}
    for k, cells in by_value.items():
        for j, cell in enumerate(sorted(cells, key=lambda rc: -rc[0])):
            source[cell] = (j, k - 1)
    order = sorted(values, key=lambda cell: (-source[cell][0], source[cell][1]))
    grid = _grid(s)
    letters = s.alphabet.letters
    t2_cells = {}
    for cell in reversed(order):
        t2_cells[source[cell]] = letters[_row_unbump(grid, cell, letters)]
    t = _tableau(s.alphabet, grid)
    if t.outer != recording.inner:
        raise InverseMismatch(f"recovered shape {t.outer} differs from {recording.inner}")
    return t, _from_cell_map(s.alphabet, t2_cells)


def _from_cell_map(alphabet: GradedAlphabet, cells: Dict[Cell, Letter]) -> Tableau:
    shape = _shape_of(cells)
    t = Tableau.from_cells(alphabet, shape, (), cells)
    if not t.validate():
        raise InverseMismatch("recovered tableau is not semistandard")
    return t


def _single_row(t: Tableau) -> None:
    if not t.is_straight() or len(t.outer) > 1:
        raise ShapeMismatch(f"expected a single row, got shape {t.outer}/{t.inner}")


def multi_insert_col(rows: Sequence[Tableau]) -> Tuple[Tableau, Tableau]:
    """(((T_1 <- T_2) <- ...) <- T_r) for single rows, with the recording over [r]."""
    if not rows:
        raise ShapeMismatch("at least one row is needed")
    alphabet = rows[0].alphabet
    grid: Grid = []
    recorded: Dict[Cell, int] = {}
    for i, row in enumerate(rows, start=1):
        _single_row(row)
        _check_alphabets(rows[0], row)
        for x in reversed(row.rows[0] if row.rows else ()):
            recorded[_col_bump(grid, alphabet.rank(x), alphabet.letters)] = i
    return _multi_result(alphabet, grid, recorded, len(rows))


def multi_insert_row(rows: Sequence[Tableau]) -> Tuple[Tableau, Tableau]:
    """(T_r -> ... -> (T_2 -> T_1)) for single rows, with the recording over [r]."""
    if not rows:
        raise ShapeMismatch("at least one row is needed")
    alphabet = rows[0].alphabet
    grid: Grid = []
    recorded: Dict[Cell, int] = {}
    for i, row in enumerate(rows, start=1):
        _single_row(row)
        _check_alphabets(rows[0], row)
        for x in row.rows[0] if row.rows else ():
            recorded[_row_bump(grid, alphabet.rank(x), alphabet.letters)] = i
    return _multi_result(alphabet, grid, recorded, len(rows))


def _multi_result(
    alphabet: GradedAlphabet, grid: Grid, recorded: Dict[Cell, int], r: int
) -> Tuple[Tableau, Tableau]:
    result = _tableau(alphabet, grid)
    rec_alphabet = interval(r)
    recording = Tableau.from_cells(
        rec_alphabet,
        result.outer,
        (),
        {cell: rec_alphabet.letters[k - 1] for cell, k in recorded.items()},
    )
    return result, recording


def _strips(s: Tableau, recording: Tableau) -> Dict[int, List[Cell]]:
    if recording.outer != s.outer or not recording.is_straight():
        raise InverseMismatch(f"recording shape {recording.outer} differs from {s.outer}")
    if not recording.validate():
        raise InverseMismatch("recording tableau is not semistandard")
    by_value: Dict[int, List[Cell]] = {}
    for cell, k in _values(recording).items():
        by_value.setdefault(k, []).append(cell)
    remaining = dict(_values(recording))
    for k in sorted(by_value, reverse=True):
        after = _shape_of({c: 0 for c, v in remaining.items() if v != k})
        before = _shape_of({c: 0 for c in remaining})
        if not SkewShape(outer=before, inner=after).is_horizontal_strip():
            raise NotHorizontalStrip(f"cells recording {k} are not a horizontal strip")
        remaining = {c: v for c, v in remaining.items() if v != k}
    return by_value


def _row_tableau(alphabet: GradedAlphabet, letters: Sequence[Letter]) -> Tableau:
    if not letters:
        return Tableau.empty(alphabet)
    return Tableau(
        alphabet=alphabet, outer=Partition([len(letters)]), rows=(tuple(letters),)
    )


def multi_insert_col_inv(s: Tableau, recording: Tableau, r: int) -> List[Tableau]:
    """Inverse of multi_insert_col: the r single rows."""
    by_value = _strips(s, recording)
    if any(k > r for k in by_value):
        raise InverseMismatch(f"recording uses values beyond [{r}]")
    grid = _grid(s)
    letters = s.alphabet.letters
    out: List[Tableau] = []
    for i in range(r, 0, -1):
        cells = sorted(by_value.get(i, []), key=lambda rc: -rc[1])
        row = [letters[_col_unbump(grid, cell, letters)] for cell in cells]
        out.append(_row_tableau(s.alphabet, row))
    return list(reversed(out))


def multi_insert_row_inv(s: Tableau, recording: Tableau, r: int) -> List[Tableau]:
    """Inverse of multi_insert_row: the r single rows."""
    by_value = _strips(s, recording)
    if any(k > r for k in by_value):
        raise InverseMismatch(f"recording uses values beyond [{r}]")
    grid = _grid(s)
    letters = s.alphabet.letters
    out: List[Tableau] = []
    for i in range(r, 0, -1):
        cells = sorted(by_value.get(i, []), key=lambda rc: -rc[1])
        row = [letters[_row_unbump(grid, cell, letters)] for cell in cells]
        out.append(_row_tableau(s.alphabet, list(reversed(row))))
    return list(reversed(out))

"""Switching of two-alphabet fillings, jeu de taquin, LR tableaux and order-change bijections."""

import logging
from functools import lru_cache
from typing import Dict, Iterator, List, Literal, Sequence, Tuple

from tabkit.alphabet import GradedAlphabet, Letter
from tabkit.exception import AlphabetMismatch, InverseMismatch, NotLR, ShapeMismatch
from tabkit.insertion import lr_alphabet
from tabkit.shape import Cell, Partition, PartitionLike, SkewShape, as_partition
from tabkit.tableau import Tableau

ScanOrder = Literal["last", "first"]

# cell -> (origin, rank, parity); origin 0 is the switching-out tableau S, 1 is T
Mixed = Dict[Cell, Tuple[int, int, int]]


def h_tableau(mu: PartitionLike, alphabet: GradedAlphabet = None) -> Tableau:
    """H^mu: row i filled with the letter i."""
    mu = as_partition(mu)
    alphabet = alphabet or lr_alphabet(len(mu))
    return Tableau(
        alphabet=alphabet,
        outer=mu,
        rows=tuple((alphabet.letters[i],) * p for i, p in enumerate(mu.parts)),
    )


def is_h_tableau(t: Tableau) -> bool:
    """Straight, with row i holding only the i-th letter."""
    if not t.is_straight():
        return False
    return all(t.alphabet.rank(x) == i for i, row in enumerate(t.rows) for x in row)


def _mixed(s: Tableau, t: Tableau) -> Mixed:
    cells: Mixed = {}
    for origin, tab in ((0, s), (1, t)):
        rank = tab.alphabet.rank
        for cell, x in tab.cells().items():
            cells[cell] = (origin, rank(x), x.parity)
    return cells


def _satisfies_switch_rules(cells: Mixed) -> bool:
    """Northwest order within each origin; parity 0 strict in columns, parity 1 in rows."""
    if not cells:
        return True
    height = max(r for r, _ in cells) + 1
    width = max(c for _, c in cells) + 1
    for origin in (0, 1):
        best = [[-1] * width for _ in range(height)]
        for r in range(height):
            for c in range(width):
                up = best[r - 1][c] if r else -1
                left = best[r][c - 1] if c else -1
                nw = max(up, left)
                entry = cells.get((r, c))
                if entry is not None and entry[0] == origin:
                    if entry[1] < nw:
                        return False
                    nw = max(nw, entry[1])
                best[r][c] = nw
    columns: Dict[Tuple[int, int], List[int]] = {}
    rows: Dict[Tuple[int, int], List[int]] = {}
    for (r, c), (origin, k, parity) in cells.items():
        if parity == 0:
            columns.setdefault((origin, c), []).append(k)
        else:
            rows.setdefault((origin, r), []).append(k)
    for values in list(columns.values()) + list(rows.values()):
        if len(set(values)) != len(values):
            return False
    return True


def _switch_step(cells: Mixed, order: ScanOrder) -> bool:
    movable = sorted((cell for cell, v in cells.items() if v[0] == 0), reverse=order == "last")
    for r, c in movable:
        for nb in ((r + 1, c), (r, c + 1)):
            other = cells.get(nb)
            if other is None or other[0] != 1:
                continue
            mine = cells[(r, c)]
            cells[(r, c)], cells[nb] = other, mine
            if _satisfies_switch_rules(cells):
                return True
            cells[(r, c)], cells[nb] = mine, other
    return False


def switch_full(
    s: Tableau, t: Tableau, order: ScanOrder = "last"
) -> Tuple[Tableau, Tableau]:
    """Switches S past T as far as possible; afterwards T fills the cells nearest the corner.

    Args:
        s: Tableau whose outer shape is the inner shape of `t`.
        t: Tableau switched towards the inner corner.
        order: Scan order of the movable cells; the result does not depend on it.

    Returns:
        (T', S') where T' has the inner shape of `s` and S' ends at the outer shape of `t`.
    """
    if s.outer != t.inner:
        raise ShapeMismatch(f"{s.outer} is not the inner shape {t.inner}")
    cells = _mixed(s, t)
    if not _satisfies_switch_rules(cells):
        raise ShapeMismatch("S*T is not a valid two-alphabet filling")
    steps = 0
    while _switch_step(cells, order):
        steps += 1
    logging.debug(f"Switching finished after {steps} steps")
    lam, base = t.outer, s.inner
    nu = []
    for r in range(len(lam)):
        count = sum(1 for (rr, _), v in cells.items() if rr == r and v[0] == 1)
        nu.append(base.part(r) + count)
    t_cells = {cell: t.alphabet.letters[v[1]] for cell, v in cells.items() if v[0] == 1}
    s_cells = {cell: s.alphabet.letters[v[1]] for cell, v in cells.items() if v[0] == 0}
    try:
        nu_shape = Partition(nu)
        t_new = Tableau.from_cells(t.alphabet, nu_shape, base, t_cells)
        s_new = Tableau.from_cells(s.alphabet, lam, nu_shape, s_cells)
    except ShapeMismatch as e:
        raise ShapeMismatch(f"switching did not separate the two fillings: {e}")
    return t_new, s_new


def is_lattice(word: Sequence) -> bool:
    """Every prefix holds at least as many k's as (k+1)'s."""
    counts: Dict[int, int] = {}
    for x in word:
        k = int(x.label) if isinstance(x, Letter) else int(x)
        counts[k] = counts.get(k, 0) + 1
        if k > 1 and counts[k] > counts.get(k - 1, 0):
            return False
    return True


def content(t: Tableau) -> Partition:
    """Weight of a tableau over a prefix of N, as a partition-like vector."""
    weight = t.weight()
    if not weight:
        return Partition()
    top = max(int(lb) for lb in weight)
    values = [weight.get(str(k), 0) for k in range(1, top + 1)]
    try:
        return Partition(values)
    except ShapeMismatch:
        raise NotLR(f"content {values} is not a partition")


def is_LR(t: Tableau, nu: PartitionLike) -> bool:
    nu = as_partition(nu)
    if not t.validate():
        return False
    try:
        if content(t) != nu:
            return False
    except NotLR:
        return False
    return is_lattice(t.word_col())


def enumerate_LR(lam: PartitionLike, mu: PartitionLike, nu: PartitionLike) -> Iterator[Tableau]:
    """All LR tableaux of shape lam/mu and content nu, filled in column reading order."""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if not lam.contains(mu) or lam.size != mu.size + nu.size:
        return
    alphabet = lr_alphabet(len(nu))
    cells = SkewShape(outer=lam, inner=mu).cells()
    order = sorted(cells, key=lambda rc: (-rc[1], rc[0]))
    filled: Dict[Cell, int] = {}
    counts = [0] * (len(nu) + 2)

    def rec(pos: int) -> Iterator[Tableau]:
        if pos == len(order):
            yield Tableau.from_cells(
                alphabet, lam, mu, {cell: alphabet.letters[v - 1] for cell, v in filled.items()}
            )
            return
        r, c = order[pos]
        high = filled.get((r, c + 1), len(nu))
        low = filled.get((r - 1, c), 0) + 1
        for v in range(low, high + 1):
            if counts[v] >= nu.part(v - 1):
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            filled[(r, c)] = v
            counts[v] += 1
            yield from rec(pos + 1)
            counts[v] -= 1
            del filled[(r, c)]

    yield from rec(0)


@lru_cache(maxsize=None)
def _lr_count(lam: Tuple[int, ...], mu: Tuple[int, ...], nu: Tuple[int, ...]) -> int:
    return sum(1 for _ in enumerate_LR(lam, mu, nu))


def lr_count(lam: PartitionLike, mu: PartitionLike, nu: PartitionLike) -> int:
    """N^lam_{mu nu}, the number of LR tableaux of shape lam/mu and content nu."""
    return _lr_count(as_partition(lam).parts, as_partition(mu).parts, as_partition(nu).parts)


def jdt(t: Tableau, order: ScanOrder = "last") -> Tuple[Tableau, Tableau]:
    """Rectification of a skew tableau: (j(T), j(T)_R) with j(T)_R in LR^lam_{nu mu}."""
    h = h_tableau(t.inner)
    return switch_full(h, t, order)


def jdt_inv(j: Tableau, recording: Tableau) -> Tableau:
    """Inverse of jdt: the skew tableau with rectification `j` and recording `recording`."""
    if not j.is_straight() or j.outer != recording.inner:
        raise InverseMismatch(f"{j.outer} is not the inner shape of the recording")
    h, t = switch_full(j, recording)
    if not is_h_tableau(h):
        raise InverseMismatch("recording is not an LR tableau")
    return t


def theta(q: Tableau) -> Tableau:
    """LR^lam_{mu nu} -> LR^lam_{nu mu}: the recording of the rectification of q."""
    return jdt(q)[1]


def theta_inv(q: Tableau) -> Tableau:
    """Inverse of theta: q lies in LR^lam_{nu mu}, the result in LR^lam_{mu nu}."""
    nu = q.inner
    h = h_tableau(nu)
    return jdt_inv(h, q)


def tau(q: Tableau) -> Tableau:
    """LR^lam_{mu nu} -> LR^{lam'}_{mu' nu'}."""
    nu = content(q) if not q.is_empty() else Partition()
    if not is_LR(q, nu):
        raise NotLR("tau needs an LR tableau")
    qt = q.transpose()
    h = h_tableau(q.inner.conjugate())
    _, s_prime = switch_full(h, qt)
    return theta(s_prime)


def tau_inv(x: Tableau) -> Tableau:
    """Inverse of tau: x lies in LR^{lam'}_{mu' nu'}."""
    nu_conj = content(x) if not x.is_empty() else Partition()
    s_prime = theta_inv(x)
    h_nu_t = h_tableau(nu_conj.conjugate()).transpose()
    h, qt = switch_full(h_nu_t, s_prime)
    if not is_h_tableau(h) or h.outer != x.inner:
        raise InverseMismatch("tableau is not in the image of tau")
    return qt.transpose()


def _swap_sequence(source: GradedAlphabet, target: GradedAlphabet) -> List[Tuple[str, str]]:
    position = {lb: i for i, lb in enumerate(target.labels())}
    current = source.labels()
    swaps = []
    changed = True
    while changed:
        changed = False
        for i in range(len(current) - 1):
            x, y = current[i], current[i + 1]
            if position[x] > position[y]:
                swaps.append((x, y))
                current[i], current[i + 1] = y, x
                changed = True
    return swaps


def _apply_swap(t: Tableau, x: str, y: str) -> Tableau:
    """Switches the x-cells past the y-cells; x is immediately below y in t's order."""
    alphabet = t.alphabet
    labels = alphabet.labels()
    i = labels.index(x)
    if labels[i + 1] != y:
        raise AlphabetMismatch(f"{x} and {y} are not adjacent in {alphabet.name}")
    sx = t.restrict(alphabet.sub([x], name=x))
    ty = t.restrict(alphabet.sub([y], name=y))
    ty_new, sx_new = switch_full(sx, ty)
    swapped = labels[:i] + [y, x] + labels[i + 2 :]
    new_alphabet = GradedAlphabet(
        name=alphabet.name, letters=tuple(alphabet.letter(lb) for lb in swapped)
    )
    cells = {cell: v for cell, v in t.cells().items() if v.label not in (x, y)}
    cells.update(ty_new.cells())
    cells.update(sx_new.cells())
    cells = {cell: new_alphabet.letter(v.label) for cell, v in cells.items()}
    return Tableau.from_cells(new_alphabet, t.outer, t.inner, cells)


def reorder_bijection(t: Tableau, target: GradedAlphabet) -> Tableau:
    """Moves T to the same letters in another order by adjacent switches."""
    if not t.alphabet.same_letters(target):
        raise AlphabetMismatch(f"{t.alphabet.name} and {target.name} differ as letter sets")
    for x, y in _swap_sequence(t.alphabet, target):
        t = _apply_swap(t, x, y)
    return t.relabel(target, {lb: lb for lb in target.labels()})


def reorder_inv(t: Tableau, source: GradedAlphabet) -> Tableau:
    """Inverse of reorder_bijection(., t.alphabet) applied to tableaux over `source`."""
    if not t.alphabet.same_letters(source):
        raise AlphabetMismatch(f"{t.alphabet.name} and {source.name} differ as letter sets")
    for x, y in reversed(_swap_sequence(source, t.alphabet)):
        t = _apply_swap(t, y, x)
    return t.relabel(source, {lb: lb for lb in source.labels()})


__all__ = [
    "content",
    "enumerate_LR",
    "h_tableau",
    "is_LR",
    "is_h_tableau",
    "is_lattice",
    "jdt",
    "jdt_inv",
    "lr_count",
    "reorder_bijection",
    "reorder_inv",
    "switch_full",
    "tau",
    "tau_inv",
    "theta",
    "theta_inv",
]

"""RSK correspondence between n-tuples of level one A/B-tableaux and (P, Q) pairs."""

import logging
from typing import Dict, Iterator, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from tabkit.abtableau import ABTableau, canonicalize, enumerate_ab, validate_ab
from tabkit.alphabet import GradedAlphabet, interval, scaffold
from tabkit.exception import AlphabetMismatch, InverseMismatch, ShapeMismatch
from tabkit.insertion import (
    multi_insert_col,
    multi_insert_col_inv,
    multi_insert_row,
    multi_insert_row_inv,
)
from tabkit.rational import (
    RationalTableau,
    delta,
    from_tableau,
    kostka,
    sigma_pow,
    to_tableau,
)
from tabkit.shape import GeneralizedPartition, Partition, generalized_partitions
from tabkit.switching import h_tableau
from tabkit.tableau import Tableau, glue


class LevelOneWord(BaseModel):
    """A level one A/B-tableau: a row over A and a row over B."""

    model_config = ConfigDict(frozen=True)

    wplus: Tableau
    wminus: Tableau

    @classmethod
    def of(
        cls, a: GradedAlphabet, plus: Sequence[str], b: GradedAlphabet, minus: Sequence[str]
    ) -> "LevelOneWord":
        return cls(wplus=_row(a, plus), wminus=_row(b, minus))

    @property
    def charge(self) -> int:
        return self.wplus.size - self.wminus.size

    def labels(self) -> Tuple[List[str], List[str]]:
        return _labels(self.wplus), _labels(self.wminus)


def _row(alphabet: GradedAlphabet, labels: Sequence[str]) -> Tableau:
    t = Tableau.from_rows(alphabet, [list(labels)] if labels else [])
    if len(t.outer) > 1 or not t.validate():
        raise ShapeMismatch(f"{list(labels)} is not a row over {alphabet.name}")
    return t


def _labels(row: Tableau) -> List[str]:
    return [x.label for x in row.rows[0]] if row.rows else []


def _rotate_row(row: Tableau) -> Tableau:
    return row.rotate(1, row.size)


def kappa(words: Sequence[LevelOneWord]) -> Tuple[ABTableau, RationalTableau]:
    """(P_w, Q_w) for an n-tuple of level one words over common alphabets."""
    if not words:
        raise ShapeMismatch("at least one word is needed")
    n = len(words)
    a, b = words[0].wplus.alphabet, words[0].wminus.alphabet
    if any(w.wplus.alphabet != a or w.wminus.alphabet != b for w in words):
        raise AlphabetMismatch("all words must use the same alphabets")

    r, rec = multi_insert_col([_rotate_row(w.wminus) for w in words])
    eta = r.outer
    d = eta.part(0)
    tminus = r.rotate(n, d).relabel(b, {lb: lb for lb in b.labels()})
    mu = tminus.inner

    q_vee = delta(rec, d, n)
    marks = scaffold(n)
    s_rows = multi_insert_row_inv(h_tableau(mu, marks), q_vee, n)
    glued = marks.concat(a)
    u_rows = [_glue_row(glued, s, w.wplus) for s, w in zip(s_rows, words)]
    result, u_rec = multi_insert_row(u_rows)
    tplus = result.restrict(a)
    parts = tuple(p - d for p in result.outer.pad(n))
    lam = GeneralizedPartition(level=n, parts=parts)
    q_w = sigma_pow(from_tableau(u_rec, n), -d)
    p_w = ABTableau(shape=lam, d=d, mu=mu, tplus=tplus, tminus=tminus)
    logging.debug(f"RSK of {n} words: shape {lam}, d={d}")
    return p_w, q_w


def _glue_row(alphabet: GradedAlphabet, left: Tableau, right: Tableau) -> Tableau:
    letters = [alphabet.letter(x.label) for x in (left.rows[0] if left.rows else ())]
    letters += [alphabet.letter(x.label) for x in (right.rows[0] if right.rows else ())]
    if not letters:
        return Tableau.empty(alphabet)
    return Tableau(alphabet=alphabet, outer=Partition([len(letters)]), rows=(tuple(letters),))


def kappa_inv(p_w: ABTableau, q_w: RationalTableau) -> List[LevelOneWord]:
    p_w = canonicalize(p_w)
    n, d = p_w.level, p_w.d
    if q_w.shape != p_w.shape:
        raise InverseMismatch(f"Q has shape {q_w.shape}, P has {p_w.shape}")
    if not q_w.validate():
        raise InverseMismatch("Q is not a rational semistandard tableau")
    a, b = p_w.tplus.alphabet, p_w.tminus.alphabet
    u_rec = to_tableau(sigma_pow(q_w, d), interval(n))
    marks = scaffold(n)
    u = glue(h_tableau(p_w.mu, marks), p_w.tplus)
    u_rows = multi_insert_row_inv(u, u_rec, n)
    s_rows = [row.restrict(marks) for row in u_rows]
    plus_rows = [row.restrict(a) for row in u_rows]
    s_result, s_rec = multi_insert_row([_as_row(s, marks) for s in s_rows])
    if s_result != h_tableau(p_w.mu, marks):
        raise InverseMismatch("scaffold rows do not insert to H^mu")
    rec = delta(s_rec, d, n)
    r = p_w.tminus.rotate(n, d)
    minus_rows = multi_insert_col_inv(r, rec, n)
    words = []
    for plus, minus in zip(plus_rows, minus_rows):
        wminus = _rotate_row(minus).relabel(b, {lb: lb for lb in b.labels()})
        words.append(LevelOneWord(wplus=_as_row(plus, a), wminus=wminus))
    return words


def _as_row(t: Tableau, alphabet: GradedAlphabet) -> Tableau:
    letters = [x for row in t.rows for x in row]
    if not letters:
        return Tableau.empty(alphabet)
    return Tableau(alphabet=alphabet, outer=Partition([len(letters)]), rows=(tuple(letters),))


def level_one_words(
    charge: int, a: GradedAlphabet, b: GradedAlphabet, window: int
) -> Iterator[LevelOneWord]:
    """All level one words of the given charge with at most `window` B-letters."""
    for x in enumerate_ab((charge,), a, b, window):
        yield LevelOneWord(wplus=_as_row(x.tplus, a), wminus=_as_row(x.tminus, b))


def _tuples(
    charges: Sequence[int], a: GradedAlphabet, b: GradedAlphabet, window: int
) -> Iterator[Tuple[LevelOneWord, ...]]:
    if not charges:
        yield ()
        return
    for w in level_one_words(charges[0], a, b, window):
        for rest in _tuples(charges[1:], a, b, window - w.wminus.size):
            yield (w,) + rest


def word_tuples(
    charges: Sequence[int], a: GradedAlphabet, b: GradedAlphabet, window: int
) -> List[Tuple[LevelOneWord, ...]]:
    """n-tuples of level one words of the given charges with at most `window` B-letters in all."""
    return list(_tuples(list(charges), a, b, window))


def kappa_content(
    charges: Sequence[int], a: GradedAlphabet, b: GradedAlphabet, window: int
) -> Tuple[int, int]:
    """Both sides of the restricted RSK count: word tuples against sum_mu |SST(mu)| K_{mu nu}."""
    n = len(charges)
    left = len(word_tuples(charges, a, b, window))
    total = sum(charges)
    high = max(total, 0) + window
    right = 0
    for mu in generalized_partitions(n, -window, high):
        if mu.charge != total or mu.plus_minus()[1].size > window:
            continue
        k = kostka(mu, charges)
        if k:
            right += k * sum(1 for _ in enumerate_ab(mu, a, b, window))
    logging.info(f"Restricted RSK for charges {tuple(charges)}: {left} tuples, {right} pairs")
    return left, right


def check_weights(words: Sequence[LevelOneWord], p_w: ABTableau, q_w: RationalTableau) -> bool:
    plus: Dict[str, int] = {}
    minus: Dict[str, int] = {}
    for w in words:
        for lb, k in w.wplus.weight().items():
            plus[lb] = plus.get(lb, 0) + k
        for lb, k in w.wminus.weight().items():
            minus[lb] = minus.get(lb, 0) + k
    weight = p_w.weight()
    if weight.plus != plus or weight.minus != minus:
        return False
    return q_w.weight() == {i + 1: w.charge for i, w in enumerate(words)} and validate_ab(p_w)

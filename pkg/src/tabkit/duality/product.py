"""Product LR rule: SST_{A/B}(mu) x SST_{A/B}(nu) -> sum over lam of SST_{A/B}(lam) x bold LR."""

import logging
from typing import Optional, Tuple

from tabkit.abtableau import ABTableau, canonicalize, reembed, validate_ab
from tabkit.alphabet import GradedAlphabet, interval, scaffold
from tabkit.coeffs import LRClass, dual_class
from tabkit.exception import AlphabetMismatch, InverseMismatch, ShapeMismatch
from tabkit.insertion import col_insert_tableau, rho_row, rho_row_inv, row_insert_tableau
from tabkit.rational import delta_swapped, undo_delta_swapped
from tabkit.shape import GeneralizedPartition
from tabkit.switching import h_tableau
from tabkit.tableau import Tableau, glue


def _same(t: Tableau, alphabet: GradedAlphabet) -> Tableau:
    return t.relabel(alphabet, {lb: lb for lb in alphabet.labels()})


def _complement(s: Tableau, d: int, level: int) -> Tableau:
    return delta_swapped(s, d, level).relabel(scaffold(d, primed=True))


def _uncomplement(u: Tableau, d: int, level: int) -> Tableau:
    return undo_delta_swapped(u.relabel(interval(d).prime()), d, level)


def rho_ab(
    t1: ABTableau, t2: ABTableau, d: Optional[int] = None
) -> Tuple[ABTableau, LRClass]:
    """(T1, T2) -> (T, [Q]) with T of level m+n and [Q] in bold LR^lam_{mu nu}.

    Args:
        t1: Tableau of shape mu, level m.
        t2: Tableau of shape nu, level n.
        d: Working number of columns left of the line. Any value from the least
            admissible one upward gives the same result; None picks the least.
    """
    if t1.is_skew or t2.is_skew:
        raise ShapeMismatch("the product rule takes straight shapes")
    a, b = t1.tplus.alphabet, t1.tminus.alphabet
    if t2.tplus.alphabet != a or t2.tminus.alphabet != b:
        raise AlphabetMismatch("both factors must use the same alphabets")
    t1, t2 = canonicalize(t1), canonicalize(t2)
    m, n = t1.level, t2.level

    r1 = t1.tminus.rotate(m, t1.d)
    r2 = t2.tminus.rotate(n, t2.d)
    r = col_insert_tableau(r1, r2).result
    least = max(t1.d, t2.d, r.outer.part(0))
    if d is None:
        d = least
    elif d < least:
        raise ShapeMismatch(f"working d={d} is below the least admissible {least}")
    tminus = _same(r.rotate(m + n, d), b)
    zeta = tminus.inner

    t1, t2 = reembed(t1, d), reembed(t2, d)
    rec = row_insert_tableau(r2.transpose(), r1.transpose()).recording
    s1, s2 = rho_row_inv(h_tableau(rec.outer, interval(d)), rec.transpose())
    u1, u2 = _complement(s1, d, m), _complement(s2, d, n)

    res = row_insert_tableau(glue(u2, t2.tplus), glue(u1, t1.tplus))
    tplus = res.result.restrict(a)
    if tplus.inner != zeta:
        raise InverseMismatch(f"inner shapes {tplus.inner} and {zeta} disagree")
    parts = tuple(p - d for p in res.result.outer.pad(m + n))
    lam = GeneralizedPartition(level=m + n, parts=parts)
    t = canonicalize(ABTableau(shape=lam, d=d, mu=zeta, tplus=tplus, tminus=tminus))
    cls = dual_class(lam, t1.shape, t2.shape, res.recording.transpose(), d)
    logging.debug(f"Product of {t1.shape} and {t2.shape} at d={d}: {lam}")
    return t, cls


def rho_ab_inv(t: ABTableau, cls: LRClass) -> Tuple[ABTableau, ABTableau]:
    """Rebuilds (T1, T2) from T and its class in bold LR^lam_{mu nu}."""
    if cls.kind != "dual" or cls.lam != t.shape:
        raise InverseMismatch(f"class of {cls.lam} does not match shape {t.shape}")
    m, n = cls.mu.level, cls.nu.level
    a, b = t.tplus.alphabet, t.tminus.alphabet
    d = max(canonicalize(t).d, cls.d)
    t = reembed(t, d)

    r = t.tminus.rotate(m + n, d)
    h_eta = h_tableau(r.outer.conjugate(), interval(d))
    w = _complement(h_eta, d, m + n)
    if w.outer != t.mu:
        raise InverseMismatch(f"complement shape {w.outer} differs from {t.mu}")
    u1_hat, u2_hat = rho_row_inv(glue(w, t.tplus), cls.rep_at_level(d))

    marks = scaffold(d, primed=True)
    s1 = _uncomplement(u1_hat.restrict(marks), d, m)
    s2 = _uncomplement(u2_hat.restrict(marks), d, n)
    result, rec = rho_row(s1, s2)
    if result != h_eta:
        raise InverseMismatch("complement rows do not insert to H^eta")
    sharp1, sharp2 = rho_row_inv(r.transpose(), rec)

    out = []
    for u_hat, sharp, level, shape in ((u1_hat, sharp1, m, cls.mu), (u2_hat, sharp2, n, cls.nu)):
        tplus = u_hat.restrict(a)
        tminus = _same(sharp.transpose().rotate(level, d), b)
        x = ABTableau(shape=shape, d=d, mu=tplus.inner, tplus=tplus, tminus=tminus)
        if not validate_ab(x):
            raise InverseMismatch(f"rebuilt factor of shape {shape} is not valid")
        out.append(canonicalize(x))
    return out[0], out[1]

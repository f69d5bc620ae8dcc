"""Skew LR rule: SST_{A/B}(lam/mu) -> sum over nu of SST_{A/B}(nu) x bold LR^{lam/mu}_nu."""

import logging
from typing import Tuple

from tabkit.abtableau import ABTableau, canonicalize, reembed, validate_ab
from tabkit.alphabet import GradedAlphabet, scaffold
from tabkit.coeffs import LRClass, delta_pq_lr, delta_pq_lr_inv, product_class
from tabkit.exception import InverseMismatch, ShapeMismatch
from tabkit.insertion import lr_alphabet
from tabkit.shape import GeneralizedPartition, delta_shape
from tabkit.switching import h_tableau, jdt, jdt_inv, theta, theta_inv
from tabkit.tableau import Tableau, glue


def _same(t: Tableau, alphabet: GradedAlphabet) -> Tableau:
    return t.relabel(alphabet, {lb: lb for lb in alphabet.labels()})


def _shifts(lam: GeneralizedPartition, mu: GeneralizedPartition, gamma_1: int) -> Tuple[int, int]:
    p = max(0, -mu.last())
    q = max(gamma_1, -lam.last() - p, 0)
    return p, q


def skew_jdt_ab(x: ABTableau) -> Tuple[ABTableau, LRClass]:
    """(T of shape lam/mu) -> (j(T) of shape nu, its class in bold LR^{lam/mu}_nu)."""
    x = canonicalize(x)
    lam, mu, n = x.shape, x.base, x.level
    a, b = x.tplus.alphabet, x.tminus.alphabet
    top = mu.parts[0] if mu.parts else 0

    r_tab = x.tminus.rotate(n, top + x.d)
    j_minus, q_j = jdt(r_tab)
    gamma = j_minus.outer
    p, q = _shifts(lam, mu, gamma.part(0))
    d = p + q
    if d < x.d:
        raise ShapeMismatch(f"shift {d} is below the canonical d={x.d}")
    x = reembed(x, d)

    marks = scaffold(n)
    q_vee = delta_pq_lr(theta(q_j), n, top + p, q).relabel(marks)
    straight, q_jdt = jdt(glue(q_vee, x.tplus))
    corner = delta_shape(gamma, n, q)
    if straight.restrict(marks) != h_tableau(corner, marks):
        raise InverseMismatch(f"scaffold part does not rectify to H^{corner}")
    tplus = straight.restrict(a)
    nu = GeneralizedPartition(level=n, parts=tuple(k - q for k in straight.outer.pad(n)))
    tminus = _same(j_minus.rotate(n, q), b)

    cls = product_class(lam, mu, nu, theta(q_jdt), p, q, kind="slash")
    j = ABTableau(shape=nu, d=q, mu=corner, tplus=tplus, tminus=tminus)
    logging.debug(f"Skew rectification of {lam}/{mu}: nu={nu}, p={p}, q={q}")
    return canonicalize(j), cls


def skew_jdt_ab_inv(j: ABTableau, cls: LRClass) -> ABTableau:
    """Rebuilds the skew tableau of shape cls.lam/cls.mu from (j(T), class)."""
    if cls.kind != "slash" or cls.nu != j.shape or j.is_skew:
        raise InverseMismatch(f"class of {cls.nu} does not match shape {j.shape}")
    lam, mu, n = cls.lam, cls.mu, cls.nu.level
    a, b = j.tplus.alphabet, j.tminus.alphabet
    top = mu.parts[0] if mu.parts else 0
    j = canonicalize(j)
    j_minus = j.tminus.rotate(n, j.d)
    p, q = _shifts(lam, mu, j.d)
    d = p + q
    j = reembed(j, q)

    marks = scaffold(n)
    straight = glue(h_tableau(j.mu, marks), j.tplus)
    q_jdt = theta_inv(cls.rep_at(p, q))
    if q_jdt.inner != straight.outer:
        raise InverseMismatch(
            f"recording inner shape {q_jdt.inner} differs from {straight.outer}"
        )
    g = jdt_inv(straight, q_jdt)
    q_vee = g.restrict(marks).relabel(lr_alphabet(n))
    tplus = g.restrict(a)

    q_j = theta_inv(delta_pq_lr_inv(q_vee, n, top + p, q))
    r_tab = jdt_inv(j_minus, q_j)
    tminus = _same(r_tab.rotate(n, top + d), b)
    if tminus.inner != tplus.inner:
        raise InverseMismatch(f"T- inner shape {tminus.inner} differs from {tplus.inner}")
    x = ABTableau(shape=lam, inner_shape=mu, d=d, mu=tplus.inner, tplus=tplus, tminus=tminus)
    if not validate_ab(x):
        raise InverseMismatch(f"rebuilt tableau of shape {lam}/{mu} is not valid")
    return canonicalize(x)

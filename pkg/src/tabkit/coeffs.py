"""Stable LR coefficients of rational and dual type, and the maps between their LR tableaux."""

import logging
from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from tabkit.alphabet import interval
from tabkit.exception import InverseMismatch, MalformedPrefix, ShapeMismatch, StabilityViolation
from tabkit.insertion import col_insert_tableau, lr_alphabet, rho_col_inv, rho_row, rho_row_inv
from tabkit.rational import delta
from tabkit.shape import (
    GeneralizedPartition,
    Partition,
    as_generalized,
    delta_shape,
    generalized_partitions,
)
from tabkit.switching import enumerate_LR, h_tableau, lr_count, tau, tau_inv, theta, theta_inv
from tabkit.tableau import Tableau

ClassKind = Literal["product", "slash", "dual"]


def _levels(
    lam, mu, nu
) -> Tuple[GeneralizedPartition, GeneralizedPartition, GeneralizedPartition]:
    return as_generalized(lam), as_generalized(mu), as_generalized(nu)


def _plus(x: GeneralizedPartition, k: int) -> Partition:
    return x.add_rect(k).to_partition()


def minimal_shift(lam, mu, nu) -> Tuple[int, int]:
    """Smallest (p, q) with mu+(p^n), nu+(q^n) and lam+((p+q)^n) all partitions."""
    lam, mu, nu = _levels(lam, mu, nu)
    p = max(0, -mu.last())
    q = max(0, -nu.last())
    q = max(q, -lam.last() - p)
    return p, q


def minimal_level(lam, mu, nu) -> int:
    """Smallest d >= 0 with lam+(d^{m+n}), mu+(d^m), nu+(d^n) all partitions."""
    lam, mu, nu = _levels(lam, mu, nu)
    return max(0, -lam.last(), -mu.last(), -nu.last())


def _n_shifted(lam, mu, nu, p: int, q: int) -> int:
    return lr_count(_plus(lam, p + q), _plus(mu, p), _plus(nu, q))


def c(lam, mu, nu, check_stable: bool = True) -> int:
    """c^lam_{mu nu} = N^{lam+((p+q)^n)}_{mu+(p^n), nu+(q^n)} for p, q large enough."""
    lam, mu, nu = _levels(lam, mu, nu)
    if not lam.level == mu.level == nu.level:
        raise ShapeMismatch(f"levels differ: {lam.level}, {mu.level}, {nu.level}")
    if lam.charge != mu.charge + nu.charge:
        return 0
    p, q = minimal_shift(lam, mu, nu)
    value = _n_shifted(lam, mu, nu, p, q)
    if check_stable and _n_shifted(lam, mu, nu, p + 1, q + 1) != value:
        raise StabilityViolation(f"c^{lam}_{mu} {nu} changes between shifts ({p},{q}) and +1")
    return value


def _n_level(lam, mu, nu, d: int) -> int:
    return lr_count(_plus(lam, d), _plus(mu, d), _plus(nu, d))


def c_hat(lam, mu, nu, check_stable: bool = True) -> int:
    """c-hat^lam_{mu nu} = N^{lam+(p^{m+n})}_{mu+(p^m), nu+(p^n)} for p large enough."""
    lam, mu, nu = _levels(lam, mu, nu)
    if lam.level != mu.level + nu.level:
        raise ShapeMismatch(f"level {lam.level} is not {mu.level} + {nu.level}")
    if lam.charge != mu.charge + nu.charge:
        return 0
    d = minimal_level(lam, mu, nu)
    value = _n_level(lam, mu, nu, d)
    if check_stable and _n_level(lam, mu, nu, d + 1) != value:
        raise StabilityViolation(f"c-hat^{lam}_{mu} {nu} changes between p={d} and p={d + 1}")
    return value


def _shift(q: Tableau, k: int, n: int) -> Tableau:
    return q.shift_columns(k, n) if k else q


def pi_shift(q_tab: Tableau, n: int, p: int, q: int) -> Tableau:
    """LR^lam_{mu nu} -> LR^{lam+((p+q)^n)}_{mu+(p^n), nu+(q^n)}."""
    if p == 0 and q == 0:
        return q_tab
    t = theta(_shift(q_tab, p, n))
    return theta(_shift(t, q, n))


def pi_shift_inv(q_tab: Tableau, n: int, p: int, q: int) -> Tableau:
    if p == 0 and q == 0:
        return q_tab
    try:
        t = _shift(theta_inv(q_tab), -q, n)
        return _shift(theta_inv(t), -p, n)
    except ShapeMismatch as e:
        raise InverseMismatch(f"tableau is not a shift by ({p},{q}): {e}")


def pi_level(q_tab: Tableau, m: int, n: int, level: int) -> Tableau:
    """Drops the first `level` rows, which must read as H^{(n^level)}, and lowers entries."""
    if level == 0:
        return q_tab
    for i in range(level):
        row = q_tab.rows[i] if i < len(q_tab.rows) else ()
        if (
            q_tab.inner.part(i) != m
            or q_tab.outer.part(i) != m + n
            or any(x.label != str(i + 1) for x in row)
        ):
            raise MalformedPrefix(f"row {i} of the recording is not {n} copies of {i + 1}")
    labels = [int(x.label) for row in q_tab.rows[level:] for x in row]
    alphabet = lr_alphabet(max(labels, default=level) - level)
    rows = tuple(
        tuple(alphabet.letters[int(x.label) - level - 1] for x in row)
        for row in q_tab.rows[level:]
    )
    outer = Partition(q_tab.outer.parts[level:])
    return Tableau(
        alphabet=alphabet, outer=outer, inner=Partition(q_tab.inner.parts[level:]), rows=rows
    )


def pi_level_inv(q_tab: Tableau, m: int, n: int, level: int) -> Tableau:
    if level == 0:
        return q_tab
    if q_tab.inner.part(0) > m or q_tab.outer.part(0) > m + n:
        raise InverseMismatch(f"{q_tab.outer}/{q_tab.inner} does not fit below the prefix rows")
    top = max((int(x.label) for row in q_tab.rows for x in row), default=0)
    alphabet = lr_alphabet(top + level)
    prefix = tuple((alphabet.letters[i],) * n for i in range(level))
    body = tuple(
        tuple(alphabet.letters[int(x.label) + level - 1] for x in row) for row in q_tab.rows
    )
    return Tableau(
        alphabet=alphabet,
        outer=Partition((m + n,) * level + q_tab.outer.parts),
        inner=Partition((m,) * level + q_tab.inner.parts),
        rows=prefix + body,
    )


def delta_pq_lr(q_tab: Tableau, n: int, p: int, q: int) -> Tableau:
    """LR^lam_{mu nu} -> LR^{delta_{p+q}(lam)}_{delta_p(mu), delta_q(nu)} by complements."""
    alphabet = interval(n)
    lam = q_tab.outer
    t1, t2 = rho_row_inv(h_tableau(lam, alphabet), tau(q_tab))
    return col_insert_tableau(delta(t1, p, n), delta(t2, q, n)).recording


def delta_pq_lr_inv(q_vee: Tableau, n: int, p: int, q: int) -> Tableau:
    alphabet = interval(n)
    lam = delta_shape(q_vee.outer, n, p + q)
    dt1, dt2 = rho_col_inv(delta(h_tableau(lam, alphabet), p + q, n), q_vee)
    t1, t2 = delta(dt1, p, n), delta(dt2, q, n)
    result, recording = rho_row(t1, t2)
    if result != h_tableau(lam, alphabet):
        raise InverseMismatch("complement pair does not insert to H^lam")
    return tau_inv(recording)


class LRClass(BaseModel):
    """A shift class of LR tableaux, held by its representative at the minimal shift.

    Attributes:
        kind: "product" and "slash" classes are shifted by pi_shift with (p, q);
            "dual" classes by pi_level with d, and carry conjugated shapes.
        rep: The representative tableau.
    """

    model_config = ConfigDict(frozen=True)

    kind: ClassKind
    lam: GeneralizedPartition
    mu: GeneralizedPartition
    nu: GeneralizedPartition
    p: int = 0
    q: int = 0
    d: int = 0
    rep: Tableau

    def rep_at(self, p: int, q: int) -> Tableau:
        if self.kind == "dual":
            raise ShapeMismatch("dual classes are shifted by level; use rep_at_level")
        if p < self.p or q < self.q:
            raise ShapeMismatch(f"({p},{q}) is below the minimal shift ({self.p},{self.q})")
        return pi_shift(self.rep, self.lam.level, p - self.p, q - self.q)

    def rep_at_level(self, d: int) -> Tableau:
        if self.kind != "dual":
            raise ShapeMismatch("only dual classes are shifted by level")
        if d < self.d:
            raise ShapeMismatch(f"{d} is below the minimal level {self.d}")
        return pi_level_inv(self.rep, self.mu.level, self.nu.level, d - self.d)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "lambda": list(self.lam.parts),
            "mu": list(self.mu.parts),
            "nu": list(self.nu.parts),
            "p": self.p,
            "q": self.q,
            "d": self.d,
            "rep": self.rep.to_json(),
        }


def product_class(
    lam, mu, nu, q_tab: Tableau, p: int, q: int, kind: ClassKind = "product"
) -> LRClass:
    """The class of q_tab in LR^{lam+((p+q)^n)}_{mu+(p^n), nu+(q^n)}, reduced to minimal shift."""
    lam, mu, nu = _levels(lam, mu, nu)
    p0, q0 = minimal_shift(lam, mu, nu)
    if p < p0 or q < q0:
        raise ShapeMismatch(f"shift ({p},{q}) is below the minimal ({p0},{q0})")
    rep = pi_shift_inv(q_tab, lam.level, p - p0, q - q0)
    return LRClass(kind=kind, lam=lam, mu=mu, nu=nu, p=p0, q=q0, rep=rep)


def dual_class(lam, mu, nu, q_tab: Tableau, d: int) -> LRClass:
    """The class of q_tab in LR^{(lam+d)'}_{(mu+d)', (nu+d)'}, reduced to the minimal level."""
    lam, mu, nu = _levels(lam, mu, nu)
    d0 = minimal_level(lam, mu, nu)
    if d < d0:
        raise ShapeMismatch(f"level {d} is below the minimal {d0}")
    rep = pi_level(q_tab, mu.level, nu.level, d - d0)
    return LRClass(kind="dual", lam=lam, mu=mu, nu=nu, d=d0, rep=rep)


def product_classes(lam, mu, nu, kind: ClassKind = "product") -> List[LRClass]:
    lam, mu, nu = _levels(lam, mu, nu)
    if lam.charge != mu.charge + nu.charge:
        return []
    p, q = minimal_shift(lam, mu, nu)
    return [
        LRClass(kind=kind, lam=lam, mu=mu, nu=nu, p=p, q=q, rep=rep)
        for rep in enumerate_LR(_plus(lam, p + q), _plus(mu, p), _plus(nu, q))
    ]


def dual_classes(lam, mu, nu) -> List[LRClass]:
    lam, mu, nu = _levels(lam, mu, nu)
    if lam.charge != mu.charge + nu.charge:
        return []
    d = minimal_level(lam, mu, nu)
    return [
        LRClass(kind="dual", lam=lam, mu=mu, nu=nu, d=d, rep=rep)
        for rep in enumerate_LR(
            _plus(lam, d).conjugate(), _plus(mu, d).conjugate(), _plus(nu, d).conjugate()
        )
    ]


def star_map(cls: LRClass) -> LRClass:
    """bold LR^lam_{mu nu} -> bold LR^{lam*}_{mu* nu*} for dual classes."""
    if cls.kind != "dual":
        raise ShapeMismatch("the star symmetry acts on dual classes")
    m, n = cls.mu.level, cls.nu.level
    d = cls.d
    rows = max(cls.lam.parts[0] + d if cls.lam.parts else 0, d)
    image = delta_pq_lr(cls.rep, rows, m, n)
    lam_s, mu_s, nu_s = cls.lam.star(), cls.mu.star(), cls.nu.star()
    return dual_class(lam_s, mu_s, nu_s, image, rows - d)


def star_class(lam, mu, nu) -> List[Tuple[LRClass, LRClass]]:
    """Pairs every class of bold LR^lam_{mu nu} with its star image."""
    pairs = [(cls, star_map(cls)) for cls in dual_classes(lam, mu, nu)]
    logging.debug(f"star symmetry on {lam}, {mu}, {nu}: {len(pairs)} classes")
    return pairs


Element = Dict[GeneralizedPartition, int]

UNIT = GeneralizedPartition.zero(0)


def dual_product(a: Element, b: Element, bound: Optional[int] = None) -> Element:
    """Product of the dual ring through c-hat, keeping keys lam with |lam^-| <= bound.

    The exact product has infinite support, so `bound` defaults to the largest
    |mu^-| + |nu^-| + |mu^+| + |nu^+| among the factors.
    """
    if bound is None:
        bound = max((mu.size + nu.size for mu in a for nu in b), default=0)
    out: Element = {}
    for mu, x in a.items():
        for nu, y in b.items():
            if not x or not y:
                continue
            level = mu.level + nu.level
            charge = mu.charge + nu.charge
            high = max(charge, 0) + bound
            for lam in generalized_partitions(level, -bound, high):
                if lam.charge != charge or lam.plus_minus()[1].size > bound:
                    continue
                k = c_hat(lam, mu, nu)
                if k:
                    out[lam] = out.get(lam, 0) + x * y * k
    return {lam: v for lam, v in out.items() if v}


def omega(a: Element) -> Element:
    return {lam.star(): v for lam, v in a.items()}

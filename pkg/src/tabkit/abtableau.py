"""A/B-semistandard tableaux of generalized shapes, their canonical forms and characters."""

import logging
from typing import Dict, Iterator, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, ValidationInfo, field_validator, model_validator

from tabkit.alphabet import GradedAlphabet
from tabkit.coeffs import LRClass, product_class
from tabkit.exception import AlphabetMismatch, InverseMismatch, NotCanonical, ShapeMismatch
from tabkit.laurent import LaurentPoly
from tabkit.shape import GeneralizedPartition, Partition, as_generalized, partitions_in_box
from tabkit.switching import jdt, jdt_inv, reorder_bijection, reorder_inv
from tabkit.tableau import Tableau, enumerate_sst


class ABWeight(BaseModel):
    model_config = ConfigDict(frozen=True)

    plus: Dict[str, int]
    minus: Dict[str, int]

    @property
    def degree(self) -> int:
        return sum(self.plus.values()) - sum(self.minus.values())

    def monomial(self) -> LaurentPoly:
        clash = set(self.plus) & set(self.minus)
        if clash:
            raise AlphabetMismatch(f"labels {sorted(clash)} occur on both sides")
        exponents = dict(self.plus)
        exponents.update({lb: -k for lb, k in self.minus.items()})
        return LaurentPoly.monomial(exponents)


class ABTableau(BaseModel):
    """A pair (T+, T-) sharing the inner partition `mu`.

    T+ fills (shape + (d^n))/mu over A and T- fills (inner_shape + (d^n))/mu over B;
    a straight shape has `inner_shape` None, and an inner shape of 0_n is stored as None.
    """

    model_config = ConfigDict(frozen=True)

    shape: GeneralizedPartition
    inner_shape: Optional[GeneralizedPartition] = None
    d: int
    mu: Partition
    tplus: Tableau
    tminus: Tableau

    @field_validator("inner_shape")
    @classmethod
    def _zero_inner_is_straight(
        cls, value: Optional[GeneralizedPartition], info: ValidationInfo
    ) -> Optional[GeneralizedPartition]:
        shape = info.data.get("shape")
        if shape is not None and value == GeneralizedPartition.zero(shape.level):
            return None
        return value

    @model_validator(mode="after")
    def _check(self) -> "ABTableau":
        if self.d < 0:
            raise ShapeMismatch(f"d must be non-negative, got {self.d}")
        if self.inner_shape is not None and self.inner_shape.level != self.shape.level:
            raise ShapeMismatch(f"levels differ: {self.shape} / {self.inner_shape}")
        if self.tplus.inner != self.mu or self.tminus.inner != self.mu:
            raise ShapeMismatch(f"T+ and T- must both have inner shape {self.mu}")
        return self

    @property
    def level(self) -> int:
        return self.shape.level

    @property
    def base(self) -> GeneralizedPartition:
        """The shape T- grows from: inner_shape, or 0_n."""
        return self.inner_shape or GeneralizedPartition.zero(self.level)

    @property
    def is_skew(self) -> bool:
        return self.inner_shape is not None

    def weight(self) -> ABWeight:
        return ABWeight(plus=self.tplus.weight(), minus=self.tminus.weight())

    def render_ascii(self) -> str:
        """T- above T+, each with a bar after column d."""
        width = max(
            (len(x.label) for t in (self.tplus, self.tminus) for row in t.rows for x in row),
            default=1,
        )
        blocks = []
        for name, t in (("T-", self.tminus), ("T+", self.tplus)):
            lines = [f"{name}:"]
            for r in range(self.level):
                cells = ["·".rjust(width)] * min(t.inner.part(r), t.outer.part(r))
                if r < len(t.rows):
                    cells += [x.label.rjust(width) for x in t.rows[r]]
                cells += [" " * width] * max(0, self.d - len(cells))
                lines.append(" ".join(cells[: self.d] + ["|"] + cells[self.d :]).rstrip())
            blocks.append("\n".join(lines))
        return "\n".join(blocks)

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "shape": list(self.shape.parts),
            "inner_shape": list(self.inner_shape.parts) if self.inner_shape else None,
            "d": self.d,
            "mu": list(self.mu.parts),
            "tplus": self.tplus.to_json(),
            "tminus": self.tminus.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "ABTableau":
        inner = data.get("inner_shape")
        return cls(
            shape=as_generalized(data["shape"]),
            inner_shape=as_generalized(inner) if inner is not None else None,
            d=data["d"],
            mu=Partition(data.get("mu", ())),
            tplus=Tableau.from_json(data["tplus"]),
            tminus=Tableau.from_json(data["tminus"]),
        )


def ab_problems(x: ABTableau) -> List[str]:
    """Every violated condition of the definition, empty when x is valid."""
    problems = []
    n, d = x.level, x.d
    top = x.shape.add_rect(d)
    bottom = x.base.add_rect(d)
    if not top.is_partition():
        problems.append(f"shape + ({d}^{n}) = {top} is not a partition")
    if not bottom.is_partition():
        problems.append(f"inner shape + ({d}^{n}) = {bottom} is not a partition")
    if problems:
        return problems
    top_p, bottom_p = top.to_partition(), bottom.to_partition()
    if not bottom_p.contains(x.mu):
        problems.append(f"mu={x.mu} is not inside {bottom_p}")
    if not top_p.contains(x.mu):
        problems.append(f"mu={x.mu} is not inside {top_p}")
    if x.tplus.outer != top_p:
        problems.append(f"T+ has outer shape {x.tplus.outer}, expected {top_p}")
    if x.tminus.outer != bottom_p:
        problems.append(f"T- has outer shape {x.tminus.outer}, expected {bottom_p}")
    if not x.tplus.validate():
        problems.append("T+ is not semistandard")
    if not x.tminus.validate():
        problems.append("T- is not semistandard")
    return problems


def validate_ab(x: ABTableau) -> bool:
    problems = ab_problems(x)
    for p in problems:
        logging.debug(f"Invalid A/B tableau: {p}")
    return not problems


def is_canonical(x: ABTableau) -> bool:
    return x.mu.part(x.level - 1) == 0


def canonicalize(x: ABTableau) -> ABTableau:
    """Strips full first columns shared by T+ and T- until the inner partition has a zero row."""
    n = x.level
    k = x.mu.part(n - 1)
    if k == 0:
        return x
    return x.model_copy(
        update={
            "d": x.d - k,
            "mu": Partition([p - k for p in x.mu.pad(n)]),
            "tplus": x.tplus.unshift_columns(k, n),
            "tminus": x.tminus.unshift_columns(k, n),
        }
    )


def reembed(x: ABTableau, d: int) -> ABTableau:
    """The same tableau with `d` columns left of the line; inverse of canonical strips."""
    k = d - x.d
    if k < 0:
        x = canonicalize(x)
        k = d - x.d
        if k < 0:
            raise NotCanonical(f"cannot lower d from {x.d} to {d}")
    if k == 0:
        return x
    n = x.level
    return x.model_copy(
        update={
            "d": d,
            "mu": Partition([p + k for p in x.mu.pad(n)]),
            "tplus": x.tplus.shift_columns(k, n),
            "tminus": x.tminus.shift_columns(k, n),
        }
    )


def weight_ab(x: ABTableau) -> ABWeight:
    return x.weight()


def empty_ab(level: int, a: GradedAlphabet, b: GradedAlphabet) -> ABTableau:
    """The only element of SST_{A/B}(0_n) with empty T+ and T-."""
    return ABTableau(
        shape=GeneralizedPartition.zero(level),
        d=0,
        mu=Partition(),
        tplus=Tableau.empty(a),
        tminus=Tableau.empty(b),
    )


def _inner_choices(n: int, top: Partition, bottom: Partition) -> Iterator[Partition]:
    width = min(top.part(0), bottom.part(0))
    for eta in partitions_in_box(max(n - 1, 0), width):
        if top.contains(eta) and bottom.contains(eta):
            yield eta


def enumerate_ab(
    shape, a: GradedAlphabet, b: GradedAlphabet, window: int, inner_shape=None
) -> Iterator[ABTableau]:
    """Canonical A/B-tableaux of shape (or shape/inner_shape) with |sh(T-)| <= window."""
    shape = as_generalized(shape)
    inner = as_generalized(inner_shape) if inner_shape is not None else None
    base = inner or GeneralizedPartition.zero(shape.level)
    n = shape.level
    d0 = max(0, -shape.last(), -base.last())
    count = 0
    # a canonical T- has a full last row of length base_n + d
    for d in range(d0, window - base.last() + 1):
        top = shape.add_rect(d).to_partition()
        bottom = base.add_rect(d).to_partition()
        for eta in _inner_choices(n, top, bottom):
            if bottom.size - eta.size > window:
                continue
            minus_fillings = list(enumerate_sst(b, bottom, eta))
            for tplus in enumerate_sst(a, top, eta):
                for tminus in minus_fillings:
                    count += 1
                    yield ABTableau(
                        shape=shape, inner_shape=inner, d=d, mu=eta, tplus=tplus, tminus=tminus
                    )
    logging.debug(f"Enumerated {count} A/B tableaux of shape {shape} within window {window}")


def character_ab(
    shape, a: GradedAlphabet, b: GradedAlphabet, window: int, inner_shape=None
) -> LaurentPoly:
    """Truncated S_shape(x_A, x_B): exact for every monomial of B-degree <= window."""
    clash = set(a.labels()) & set(b.labels())
    if clash:
        raise AlphabetMismatch(f"A and B share labels {sorted(clash)}")
    total = LaurentPoly.zero()
    for x in enumerate_ab(shape, a, b, window, inner_shape):
        total = total + x.weight().monomial()
    return total


def branch(x: ABTableau) -> Tuple[LRClass, Tableau, Tableau]:
    """(class in bold LR^{lam/mu}_{nu*}, S in SST_A(mu), S' in SST_B(nu))."""
    if x.is_skew:
        raise ShapeMismatch("branching is defined for straight shapes")
    if not is_canonical(x):
        raise NotCanonical(f"inner partition {x.mu} has no zero row")
    n, d = x.level, x.d
    s, q_tab = jdt(x.tplus)
    rotated = x.tminus.rotate(n, d)
    b = x.tminus.alphabet
    s_prime = reorder_bijection(rotated, b)
    kappa = GeneralizedPartition(level=n, parts=s.outer.pad(n))
    nu = GeneralizedPartition(level=n, parts=s_prime.outer.pad(n))
    cls = product_class(x.shape, kappa, nu.star(), q_tab, 0, d, kind="slash")
    return cls, s, s_prime


def branch_inv(cls: LRClass, s: Tableau, s_prime: Tableau) -> ABTableau:
    n = cls.lam.level
    d = cls.q
    if s.outer.pad(n) != cls.mu.parts or s_prime.outer.pad(n) != cls.nu.star().parts:
        raise InverseMismatch("tableau shapes do not match the class")
    q_tab = cls.rep_at(0, d)
    tplus = jdt_inv(s, q_tab)
    b = s_prime.alphabet
    rotated = reorder_inv(s_prime, b.pi())
    tminus = rotated.rotate(n, d) if d else Tableau.empty(b, Partition())
    tminus = tminus.relabel(b, {lb: lb for lb in b.labels()})
    x = ABTableau(shape=cls.lam, d=d, mu=tplus.inner, tplus=tplus, tminus=tminus)
    if not validate_ab(x):
        raise InverseMismatch("rebuilt pair is not an A/B-semistandard tableau")
    return x

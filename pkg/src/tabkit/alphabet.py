"""Z2-graded, linearly ordered alphabets and their order/grading transformations."""

from typing import Dict, List, Literal, Optional, Sequence, Tuple

import sympy
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator

from tabkit.exception import AlphabetMismatch, DuplicateLabel

SCAFFOLD_PREFIX = "#"


class Letter(BaseModel):
    """A letter of a graded alphabet; parity 0 letters are column strict, parity 1 row strict."""

    model_config = ConfigDict(frozen=True)

    label: str
    parity: Literal[0, 1] = 0

    def flipped(self) -> "Letter":
        return Letter(label=self.label, parity=1 - self.parity)

    def __str__(self) -> str:
        return self.label


class GradedAlphabet(BaseModel):
    """A finite linearly ordered alphabet; the position in `letters` is the order.

    Attributes:
        name: Display name, suffixed by the transformations applied to it.
        letters: Letters in increasing order.
        truncation_of: Tag of the infinite alphabet this is a prefix (or suffix) of.
    """

    model_config = ConfigDict(frozen=True)

    name: str
    letters: Tuple[Letter, ...] = Field(default=(), description="Letters in increasing order.")
    truncation_of: Optional[str] = None

    _rank: Dict[str, int] = PrivateAttr(default_factory=dict)

    @field_validator("letters")
    @classmethod
    def _unique_labels(cls, letters: Tuple[Letter, ...]) -> Tuple[Letter, ...]:
        seen = set()
        for letter in letters:
            if letter.label in seen:
                raise DuplicateLabel(f"label {letter.label!r} appears twice")
            seen.add(letter.label)
        return letters

    def model_post_init(self, __context) -> None:
        self._rank = {letter.label: i for i, letter in enumerate(self.letters)}

    def __len__(self) -> int:
        return len(self.letters)

    def __contains__(self, item) -> bool:
        if isinstance(item, Letter):
            return self._rank.get(item.label) is not None and self.letter(item.label) == item
        return item in self._rank

    def labels(self) -> List[str]:
        return [letter.label for letter in self.letters]

    def letter(self, label: str) -> Letter:
        try:
            return self.letters[self._rank[label]]
        except KeyError:
            raise AlphabetMismatch(f"{label!r} is not a letter of {self.name}")

    def rank(self, item) -> int:
        label = item.label if isinstance(item, Letter) else item
        try:
            return self._rank[label]
        except KeyError:
            raise AlphabetMismatch(f"{label!r} is not a letter of {self.name}")

    def less(self, a: Letter, b: Letter) -> bool:
        return self.rank(a) < self.rank(b)

    def prime(self) -> "GradedAlphabet":
        """Same order, opposite grading."""
        if self.name.endswith("'"):
            name = self.name[:-1]
        else:
            name = self.name + "'"
        return GradedAlphabet(
            name=name,
            letters=tuple(letter.flipped() for letter in self.letters),
            truncation_of=self.truncation_of,
        )

    def pi(self) -> "GradedAlphabet":
        """Same grading, reversed order."""
        if self.name.endswith("^pi"):
            name = self.name[: -len("^pi")]
        else:
            name = self.name + "^pi"
        return GradedAlphabet(
            name=name, letters=tuple(reversed(self.letters)), truncation_of=self.truncation_of
        )

    def sharp(self) -> "GradedAlphabet":
        return self.prime().pi()

    def concat(self, other: "GradedAlphabet") -> "GradedAlphabet":
        """Every letter of `self` below every letter of `other`."""
        clash = set(self._rank) & set(other._rank)
        if clash:
            raise DuplicateLabel(
                f"cannot concatenate {self.name} and {other.name}: {sorted(clash)}"
            )
        if not other.letters:
            return self
        if not self.letters:
            return other
        return GradedAlphabet(
            name=f"{self.name}*{other.name}", letters=self.letters + other.letters
        )

    def shuffle(self) -> "GradedAlphabet":
        """All parity 0 letters first, then all parity 1 letters, each block in its old order."""
        even = tuple(letter for letter in self.letters if letter.parity == 0)
        odd = tuple(letter for letter in self.letters if letter.parity == 1)
        if even + odd == self.letters:
            return self
        return GradedAlphabet(
            name=f"{self.name}^sh", letters=even + odd, truncation_of=self.truncation_of
        )

    def sub(self, labels: Sequence[str], name: Optional[str] = None) -> "GradedAlphabet":
        """Sub-alphabet on `labels`, keeping this alphabet's order."""
        wanted = set(labels)
        return GradedAlphabet(
            name=name or f"{self.name}|",
            letters=tuple(letter for letter in self.letters if letter.label in wanted),
        )

    def same_letters(self, other: "GradedAlphabet") -> bool:
        return sorted(self.letters, key=lambda x: x.label) == sorted(
            other.letters, key=lambda x: x.label
        )

    @classmethod
    def from_labels(
        cls, name: str, labels: Sequence[str], parities: Optional[Sequence[int]] = None
    ) -> "GradedAlphabet":
        parities = parities if parities is not None else [0] * len(labels)
        return cls(
            name=name,
            letters=tuple(Letter(label=lb, parity=p) for lb, p in zip(labels, parities)),
        )

    def to_json(self) -> dict:
        return self.model_dump()

    @classmethod
    def from_json(cls, data: dict) -> "GradedAlphabet":
        return cls.model_validate(data)


def interval(n: int, primed: bool = False) -> GradedAlphabet:
    """[n] = {1 < ... < n}, parity 0 (parity 1 for [n]')."""
    parity = 1 if primed else 0
    return GradedAlphabet(
        name=f"[{n}]'" if primed else f"[{n}]",
        letters=tuple(Letter(label=str(i), parity=parity) for i in range(1, n + 1)),
    )


def negative_interval(n: int) -> GradedAlphabet:
    """[-n] = {-n < ... < -1}, parity 0."""
    return GradedAlphabet(
        name=f"[-{n}]", letters=tuple(Letter(label=str(-i)) for i in range(n, 0, -1))
    )


def naturals(k: int) -> GradedAlphabet:
    alphabet = interval(k)
    return alphabet.model_copy(update={"name": "N", "truncation_of": "N"})


def naturals_prime(k: int) -> GradedAlphabet:
    return naturals(k).prime()


def scaffold(k: int, primed: bool = False) -> GradedAlphabet:
    """A copy of [k] whose labels cannot collide with user alphabets."""
    parity = 1 if primed else 0
    return GradedAlphabet(
        name=f"{SCAFFOLD_PREFIX}[{k}]" + ("'" if primed else ""),
        letters=tuple(
            Letter(label=f"{SCAFFOLD_PREFIX}{i}", parity=parity) for i in range(1, k + 1)
        ),
    )


def half_label(value) -> str:
    return str(sympy.Rational(value))


def half_pos_prime(k: int) -> GradedAlphabet:
    """The first k elements 1/2 < 1 < 3/2 < ... of (1/2 Z>0)'; integers have parity 1."""
    values = [sympy.Rational(i, 2) for i in range(1, k + 1)]
    return GradedAlphabet(
        name="(1/2Z>0)'",
        truncation_of="half-integers-positive-primed",
        letters=tuple(
            Letter(label=half_label(v), parity=1 if v.is_integer else 0) for v in values
        ),
    )


def half_nonpos_prime(k: int) -> GradedAlphabet:
    """The k largest elements of (1/2 Z<=0)', in increasing order; integers have parity 1."""
    values = [sympy.Rational(-i, 2) for i in range(k - 1, -1, -1)]
    return GradedAlphabet(
        name="(1/2Z<=0)'",
        truncation_of="half-integers-nonpositive-primed",
        letters=tuple(
            Letter(label=half_label(v), parity=1 if v.is_integer else 0) for v in values
        ),
    )


def zpos(k: int) -> GradedAlphabet:
    return GradedAlphabet(
        name="Z>0",
        truncation_of="Z>0",
        letters=tuple(Letter(label=str(i)) for i in range(1, k + 1)),
    )


def znonpos(k: int) -> GradedAlphabet:
    """The k largest non-positive integers, increasing."""
    return GradedAlphabet(
        name="Z<=0",
        truncation_of="Z<=0",
        letters=tuple(Letter(label=str(-i)) for i in range(k - 1, -1, -1)),
    )


BUILTINS = {
    "interval": interval,
    "negative-interval": negative_interval,
    "naturals": naturals,
    "naturals-prime": naturals_prime,
    "half-pos-prime": half_pos_prime,
    "half-nonpos-prime": half_nonpos_prime,
    "zpos": zpos,
    "znonpos": znonpos,
}


def builtin(name: str, k: int) -> GradedAlphabet:
    try:
        return BUILTINS[name](k)
    except KeyError:
        raise AlphabetMismatch(f"unknown builtin alphabet {name!r}; known: {sorted(BUILTINS)}")

"""Partitions, generalized partitions of level n, and skew shapes."""

from typing import Dict, Iterator, List, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from tabkit.exception import RectangleTooSmall, ShapeMismatch

Cell = Tuple[int, int]


def _weakly_decreasing(parts: Sequence[int]) -> bool:
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


class Partition(BaseModel):
    """An ordinary partition; trailing zeros are dropped, so equality ignores them."""

    model_config = ConfigDict(frozen=True)

    parts: Tuple[int, ...] = ()

    @field_validator("parts", mode="before")
    @classmethod
    def _normalize(cls, parts) -> Tuple[int, ...]:
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ShapeMismatch(f"partition parts must be non-negative: {parts}")
        if not _weakly_decreasing(parts):
            raise ShapeMismatch(f"partition parts must be weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        return parts

    def __init__(self, parts=(), **kwargs):
        super().__init__(parts=parts, **kwargs)

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """The i-th part (0-based), zero past the length."""
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    def pad(self, n: int) -> Tuple[int, ...]:
        if len(self.parts) > n:
            raise ShapeMismatch(f"{self.parts} has more than {n} parts")
        return self.parts + (0,) * (n - len(self.parts))

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition([sum(1 for p in self.parts if p > j) for j in range(self.parts[0])])

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(
            other.part(i) <= self.part(i) for i in range(len(other))
        )

    def add_rect(self, d: int, n: int) -> "Partition":
        """lambda + (d^n); the result must again be a partition."""
        return Partition([p + d for p in self.pad(n)])

    def cells(self) -> List[Cell]:
        return [(r, c) for r, p in enumerate(self.parts) for c in range(p)]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


PartitionLike = Union[Partition, Sequence[int]]


def as_partition(value: PartitionLike) -> Partition:
    return value if isinstance(value, Partition) else Partition(tuple(value))


class GeneralizedPartition(BaseModel):
    """A weakly decreasing integer vector of fixed level; the level is part of its identity."""

    model_config = ConfigDict(frozen=True)

    level: int = Field(..., ge=0)
    parts: Tuple[int, ...]

    @model_validator(mode="after")
    def _check(self) -> "GeneralizedPartition":
        if len(self.parts) != self.level:
            raise ShapeMismatch(f"level {self.level} needs {self.level} parts, got {self.parts}")
        if not _weakly_decreasing(self.parts):
            raise ShapeMismatch(f"generalized partition must be weakly decreasing: {self.parts}")
        return self

    @classmethod
    def of(cls, parts: Sequence[int]) -> "GeneralizedPartition":
        parts = tuple(int(p) for p in parts)
        return cls(level=len(parts), parts=parts)

    @classmethod
    def zero(cls, n: int) -> "GeneralizedPartition":
        return cls(level=n, parts=(0,) * n)

    @property
    def size(self) -> int:
        """|lambda| = sum of absolute values of the parts."""
        return sum(abs(p) for p in self.parts)

    @property
    def charge(self) -> int:
        """<lambda> = sum of the parts."""
        return sum(self.parts)

    def last(self) -> int:
        return self.parts[-1] if self.parts else 0

    def star(self) -> "GeneralizedPartition":
        parts = tuple(-p for p in reversed(self.parts))
        return GeneralizedPartition(level=self.level, parts=parts)

    def plus_minus(self) -> Tuple[Partition, Partition]:
        plus = Partition([max(p, 0) for p in self.parts])
        minus = Partition([max(-p, 0) for p in reversed(self.parts)])
        return plus, minus

    def add_rect(self, d: int) -> "GeneralizedPartition":
        return GeneralizedPartition(level=self.level, parts=tuple(p + d for p in self.parts))

    def is_partition(self) -> bool:
        return self.last() >= 0

    def to_partition(self) -> Partition:
        if not self.is_partition():
            raise ShapeMismatch(f"{self.parts} has negative parts")
        return Partition(self.parts)

    def column_length(self, k: int) -> int:
        """Number of cells in signed column k of the diagram (k != 0)."""
        if k > 0:
            return sum(1 for p in self.parts if p >= k)
        if k < 0:
            return sum(1 for p in self.parts if p <= k)
        raise ShapeMismatch("there is no column 0")

    def cells(self) -> List[Cell]:
        """Cells (row from 1, signed column) of the generalized diagram."""
        out = []
        for i, p in enumerate(self.parts, start=1):
            cols = range(1, p + 1) if p > 0 else range(-1, p - 1, -1)
            out.extend((i, j) for j in cols)
        return out

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def as_generalized(value) -> GeneralizedPartition:
    if isinstance(value, GeneralizedPartition):
        return value
    return GeneralizedPartition.of(value)


class SkewShape(BaseModel):
    model_config = ConfigDict(frozen=True)

    outer: Partition
    inner: Partition = Partition()

    @model_validator(mode="after")
    def _check(self) -> "SkewShape":
        if not self.outer.contains(self.inner):
            raise ShapeMismatch(f"{self.inner} is not contained in {self.outer}")
        return self

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def cells(self) -> List[Cell]:
        return [
            (r, c)
            for r in range(len(self.outer))
            for c in range(self.inner.part(r), self.outer.part(r))
        ]

    def is_horizontal_strip(self) -> bool:
        """At most one cell in each column."""
        return all(
            self.outer.part(r + 1) <= self.inner.part(r) for r in range(len(self.outer))
        )

    def is_vertical_strip(self) -> bool:
        return all(self.outer.part(r) - self.inner.part(r) <= 1 for r in range(len(self.outer)))


def conjugate(shape: PartitionLike) -> Partition:
    return as_partition(shape).conjugate()


def star(shape) -> GeneralizedPartition:
    return as_generalized(shape).star()


def plus_minus(shape) -> Tuple[Partition, Partition]:
    return as_generalized(shape).plus_minus()


def add_rect(shape, d: int) -> GeneralizedPartition:
    return as_generalized(shape).add_rect(d)


def delta_shape(shape: PartitionLike, n: int, k: int) -> Partition:
    """Complement of `shape` inside the rectangle (k^n), rotated by 180 degrees."""
    shape = as_partition(shape)
    if shape.part(0) > k:
        raise RectangleTooSmall(f"k={k} is smaller than the first part of {shape}")
    return Partition([k - p for p in reversed(shape.pad(n))])


def signed_conjugate(shape) -> Dict[int, int]:
    """Column lengths of a generalized diagram keyed by signed column index."""
    shape = as_generalized(shape)
    out = {}
    for i in range(1, max((p for p in shape.parts if p > 0), default=0) + 1):
        out[i] = shape.column_length(i)
    for i in range(-1, min((p for p in shape.parts if p < 0), default=0) - 1, -1):
        out[i] = shape.column_length(i)
    return out


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """All partitions inside the rows x cols rectangle, smallest first."""

    def rec(prefix: Tuple[int, ...], cap: int) -> Iterator[Tuple[int, ...]]:
        if len(prefix) == rows:
            yield prefix
            return
        for p in range(0, cap + 1):
            yield from rec(prefix + (p,), p)

    seen = set()
    for parts in sorted(rec((), cols), key=lambda t: (sum(t), tuple(-x for x in t))):
        part = Partition(parts)
        if part not in seen:
            seen.add(part)
            yield part


def partitions_of(size: int, max_length: int = None) -> Iterator[Partition]:
    """Partitions of `size`, largest first."""

    def rec(remaining: int, cap: int) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for p in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - p, p):
                yield (p,) + rest

    for parts in rec(size, size):
        if max_length is None or len(parts) <= max_length:
            yield Partition(parts)


def generalized_partitions(level: int, low: int, high: int) -> Iterator[GeneralizedPartition]:
    """All weakly decreasing vectors of `level` integers in [low, high]."""

    def rec(prefix: Tuple[int, ...], cap: int) -> Iterator[Tuple[int, ...]]:
        if len(prefix) == level:
            yield prefix
            return
        for p in range(cap, low - 1, -1):
            yield from rec(prefix + (p,), p)

    for parts in rec((), high):
        yield GeneralizedPartition(level=level, parts=parts)

import pytest

from tabkit.exception import RectangleTooSmall, ShapeMismatch
from tabkit.shape import (
    GeneralizedPartition,
    Partition,
    SkewShape,
    delta_shape,
    generalized_partitions,
    partitions_in_box,
    partitions_of,
    signed_conjugate,
)


def test_partition_drops_trailing_zeros():
    assert Partition((2, 1, 0, 0)) == Partition((2, 1))
    assert Partition((2, 1)).pad(4) == (2, 1, 0, 0)


def test_partition_rejects_increasing_parts():
    with pytest.raises(ShapeMismatch):
        Partition((1, 2))
    with pytest.raises(ShapeMismatch):
        Partition((1, -1))


def test_conjugate():
    assert Partition((3, 1)).conjugate() == Partition((2, 1, 1))
    assert Partition().conjugate() == Partition()


def test_generalized_partition_statistics():
    lam = GeneralizedPartition.of((3, 2, 0, -1, -2))
    assert lam.size == 8
    assert lam.charge == 2
    assert lam.star() == GeneralizedPartition.of((2, 1, 0, -2, -3))
    assert lam.plus_minus() == (Partition((3, 2)), Partition((2, 1)))
    assert lam.add_rect(2).to_partition() == Partition((5, 4, 2, 1))


def test_level_is_part_of_identity():
    assert GeneralizedPartition.zero(2) != GeneralizedPartition.zero(3)
    with pytest.raises(ShapeMismatch):
        GeneralizedPartition(level=2, parts=(1,))


def test_signed_columns():
    lam = GeneralizedPartition.of((4, 3, 2, -2, -3))
    assert lam.column_length(1) == 3
    assert lam.column_length(4) == 1
    assert lam.column_length(-1) == 2
    assert lam.column_length(-3) == 1
    assert signed_conjugate(lam) == {1: 3, 2: 3, 3: 2, 4: 1, -1: 2, -2: 2, -3: 1}
    with pytest.raises(ShapeMismatch):
        lam.column_length(0)


def test_delta_shape():
    assert delta_shape((4, 3, 1), 4, 5) == Partition((5, 4, 2, 1))
    with pytest.raises(RectangleTooSmall):
        delta_shape((4,), 1, 3)


def test_strips():
    assert SkewShape(outer=Partition((3, 1)), inner=Partition((1,))).is_horizontal_strip()
    assert not SkewShape(outer=Partition((2, 2)), inner=Partition((1,))).is_horizontal_strip()
    assert SkewShape(outer=Partition((2, 2)), inner=Partition((1, 1))).is_vertical_strip()
    with pytest.raises(ShapeMismatch):
        SkewShape(outer=Partition((1,)), inner=Partition((2,)))


def test_enumerations():
    assert len(list(partitions_in_box(2, 2))) == 6
    assert len(list(partitions_of(4))) == 5
    assert [p.parts for p in partitions_of(3)] == [(3,), (2, 1), (1, 1, 1)]
    assert len(list(generalized_partitions(2, -1, 1))) == 6

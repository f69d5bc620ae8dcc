import pytest

from tabkit.alphabet import GradedAlphabet, interval, naturals
from tabkit.exception import AlphabetMismatch, InverseMismatch, ShapeMismatch
from tabkit.shape import Partition
from tabkit.switching import (
    content,
    enumerate_LR,
    h_tableau,
    is_LR,
    is_lattice,
    jdt,
    jdt_inv,
    lr_count,
    reorder_bijection,
    reorder_inv,
    switch_full,
    tau,
    tau_inv,
    theta,
    theta_inv,
)
from tabkit.tableau import Tableau, enumerate_sst


def test_switch_naturals_past_primed_naturals():
    s = Tableau.from_rows(naturals(3), [["1", "1", "2"], ["2", "3"]])
    t = Tableau.from_rows(naturals(3).prime(), [[], ["3"], ["1", "2", "3"]], inner=(3, 2))
    t_new, s_new = switch_full(s, t)
    assert t_new.to_rows() == [["1", "2", "3"], ["3"]]
    assert s_new.to_rows() == [[], ["1", "2"], ["1", "2", "3"]]
    assert switch_full(s, t, order="first") == (t_new, s_new)


def test_switch_needs_adjacent_shapes():
    s = Tableau.from_rows(interval(1), [["1"]])
    t = Tableau.from_rows(interval(1), [["1"]], inner=(2,))
    with pytest.raises(ShapeMismatch):
        switch_full(s, t)


def test_h_tableau():
    h = h_tableau((2, 1))
    assert h.to_rows() == [["1", "1"], ["2"]]
    assert is_LR(h, (2, 1))


@pytest.mark.parametrize(
    "word, ok",
    [(["1", "1", "2"], True), (["1", "2", "2"], False), (["2"], False), ([], True)],
)
def test_is_lattice(word, ok):
    assert is_lattice(word) is ok


@pytest.mark.parametrize(
    "lam, mu, nu, count",
    [
        ((2, 1), (1,), (1, 1), 1),
        ((2, 1), (1,), (2,), 1),
        ((3, 2, 1), (2, 1), (2, 1), 2),
        ((2, 2), (1,), (2, 1), 1),
        ((2,), (1,), (1, 1), 0),
        ((4, 2), (2,), (2, 2), 1),
    ],
)
def test_lr_count(lam, mu, nu, count):
    assert lr_count(lam, mu, nu) == count
    assert all(is_LR(q, nu) for q in enumerate_LR(lam, mu, nu))


def test_lr_symmetry_in_mu_nu():
    assert lr_count((3, 2, 1), (2,), (2, 1, 1)) == lr_count((3, 2, 1), (2, 1, 1), (2,))


def test_jdt_rectifies():
    t = Tableau.from_rows(interval(2), [["1"], ["2"]], inner=(1,))
    j, rec = jdt(t)
    assert j.outer == Partition((1, 1))
    assert j.to_rows() == [["1"], ["2"]]
    assert rec.inner == Partition((1, 1))
    assert rec.to_rows() == [["1"], []]
    assert jdt_inv(j, rec) == t


def test_jdt_round_trip_on_skew_shape():
    for t in enumerate_sst(interval(3), (3, 2), (2, 1)):
        j, rec = jdt(t)
        assert j.is_straight() and j.validate()
        assert content(rec) == t.inner
        assert jdt(t, order="first") == (j, rec)
        assert jdt_inv(j, rec) == t


@pytest.mark.parametrize("parities", [[0, 1], [1, 0], [1, 0, 1]])
def test_jdt_round_trip_over_mixed_parities(parities):
    a = GradedAlphabet.from_labels("M", [f"m{i}" for i in range(len(parities))], parities)
    for outer, inner in (((3, 2), (2, 1)), ((2, 2, 1), (1, 1)), ((3, 1), (1,))):
        for t in enumerate_sst(a, outer, inner):
            j, rec = jdt(t)
            assert j.is_straight() and j.validate()
            assert jdt(t, order="first") == (j, rec)
            assert jdt_inv(j, rec) == t


def test_jdt_inv_rejects_wrong_shape():
    j = Tableau.from_rows(interval(2), [["1"]])
    rec = Tableau.from_rows(naturals(1), [["1"]], inner=(1, 1))
    with pytest.raises(InverseMismatch):
        jdt_inv(j, rec)


def test_theta_swaps_mu_and_nu():
    for q in enumerate_LR((3, 2, 1), (2, 1), (2, 1)):
        p = theta(q)
        assert is_LR(p, (2, 1))
        assert theta_inv(p) == q


def test_tau_conjugates():
    for q in enumerate_LR((3, 1), (2,), (1, 1)):
        x = tau(q)
        assert x.outer == Partition((2, 1, 1))
        assert x.inner == Partition((1, 1))
        assert content(x) == Partition((2,))
        assert tau_inv(x) == q


def test_reorder_letters():
    x = GradedAlphabet.from_labels("X", ["a", "b"])
    t = Tableau.from_rows(x, [["a", "b"]])
    moved = reorder_bijection(t, x.pi())
    assert moved.to_rows() == [["b", "a"]]
    assert moved.alphabet == x.pi()
    assert moved.validate()
    assert reorder_inv(moved, x) == t


def test_reorder_needs_same_letters():
    t = Tableau.from_rows(interval(2), [["1"]])
    with pytest.raises(AlphabetMismatch):
        reorder_bijection(t, interval(3))

from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from wallcount.arith import binomial, catalan
from wallcount.paths import count_weakly_above, path_to_reverse_partition, periodic_wall_boundary
from wallcount.tableaux import (
    WallTableau,
    YoungBuilding,
    all_wall_sets,
    bijection_counts,
    enumerate_tableaux,
    mu_le,
    path_above,
    periodic_building,
    random_wall_sets,
    render,
    reverse_partition,
    tableau_from_y,
    tableau_path,
    verify_bijection,
    y_extremes,
    y_ge,
    yamanouchi_word,
)

EXAMPLE = YoungBuilding(6, frozenset({2, 3, 5, 6}))


def brute_tableaux(b):
    # independent oracle: every filling of the 2 x m shape by 1..2m
    m = b.m
    found = set()
    for perm in permutations(range(1, 2 * m + 1)):
        xs, ys = perm[:m], perm[m:]
        if list(xs) != sorted(xs) or list(ys) != sorted(ys):
            continue
        if all(i + 1 in b.walls or xs[i] < ys[i] for i in range(m)):
            found.add(ys)
    return found


wall_buildings = st.integers(1, 6).flatmap(
    lambda m: st.sets(st.integers(1, m)).map(lambda s: YoungBuilding(m, frozenset(s)))
)


def test_enumerate_examples():
    (t,) = enumerate_tableaux(YoungBuilding(1))
    assert (t.x, t.y) == ((1,), (2,))
    assert len(enumerate_tableaux(YoungBuilding(1, frozenset({1})))) == 2
    assert len(enumerate_tableaux(YoungBuilding(2, frozenset({2})))) == 3


@pytest.mark.parametrize("walls", all_wall_sets(4))
def test_enumerate_matches_permutations(walls):
    b = YoungBuilding(4, walls)
    assert {t.y for t in enumerate_tableaux(b)} == brute_tableaux(b)


def test_width_guard(monkeypatch):
    monkeypatch.setenv("WALLCOUNT_MAX_WIDTH", "3")
    with pytest.raises(ValueError):
        enumerate_tableaux(YoungBuilding(4))
    monkeypatch.setenv("WALLCOUNT_MAX_WIDTH", "4")
    assert len(enumerate_tableaux(YoungBuilding(4))) == catalan(4)


def test_tableau_validation():
    with pytest.raises(ValueError):
        WallTableau(2, (1, 2), (3, 3))
    with pytest.raises(ValueError):
        WallTableau(2, (2, 1), (3, 4))
    with pytest.raises(ValueError):
        WallTableau(2, (1, 4), (2, 3))
    WallTableau(2, (1, 4), (2, 3), frozenset({2}))
    with pytest.raises(ValueError):
        YoungBuilding(2, frozenset({3}))


def test_example_encodings():
    t = tableau_from_y((2, 3, 4, 8, 9, 10), EXAMPLE)
    assert yamanouchi_word(t) == "011100011100"
    assert tableau_path(t).compact() == "NE3N3E3N2"
    assert reverse_partition(t).parts == (0, 3, 3, 3, 6, 6)


def test_small_encodings():
    (t,) = enumerate_tableaux(YoungBuilding(1))
    assert tableau_path(t).steps == "NE"
    assert reverse_partition(WallTableau(2, (1, 3), (2, 4))).parts == (0, 1)


@given(wall_buildings)
def test_encodings_agree(b):
    for t in enumerate_tableaux(b):
        w = yamanouchi_word(t)
        assert w.count("0") == w.count("1") == b.m
        p = tableau_path(t)
        assert path_to_reverse_partition(p, b.m) == reverse_partition(t)


def test_y_extremes_examples():
    assert y_extremes(EXAMPLE)[1] == (2, 3, 4, 8, 9, 10)
    assert y_extremes(YoungBuilding(4)) == ((5, 6, 7, 8), (2, 4, 6, 8))
    assert y_extremes(YoungBuilding(3, frozenset({1, 2, 3})))[1] == (1, 2, 3)
    t0 = tableau_from_y(y_extremes(EXAMPLE)[0], EXAMPLE)
    assert reverse_partition(t0).parts == (0,) * 6


@given(wall_buildings)
def test_y_extremes_bound_everything(b):
    y_min, y_max = y_extremes(b)
    # both extremes are tableaux of b
    lo, hi = tableau_from_y(y_min, b), tableau_from_y(y_max, b)
    for t in enumerate_tableaux(b):
        assert y_ge(lo, t) and y_ge(t, hi)


@given(wall_buildings, st.data())
@settings(max_examples=60)
def test_order_predicates_agree(b, data):
    ts = enumerate_tableaux(b)
    t = data.draw(st.sampled_from(ts))
    u = data.draw(st.sampled_from(ts))
    assert mu_le(t, u) == path_above(t, u) == y_ge(t, u)


def test_bijection_examples():
    rep = bijection_counts(YoungBuilding(3))
    assert rep.tableaux == rep.paths == rep.partitions == catalan(3)
    rep = bijection_counts(YoungBuilding(3, frozenset({1, 2, 3})))
    assert rep.tableaux == rep.paths == rep.partitions == binomial(6, 3)


@pytest.mark.parametrize("m", range(1, 6))
def test_bijection_random(m):
    for walls in random_wall_sets(m, 6, seed=m):
        assert verify_bijection(YoungBuilding(m, walls))


@pytest.mark.parametrize("m,n", [(1, 1), (1, 3), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2)])
def test_periodic_building_matches_paths(m, n):
    b = periodic_building(m, n)
    assert b.m == m * n
    count = count_weakly_above(periodic_wall_boundary(m, n), (m * n, m * n))
    assert len(enumerate_tableaux(b)) == count


def test_render():
    t = WallTableau(2, (1, 4), (2, 3), frozenset({2}))
    assert render(t) == "2 3\n1 4\n  |"


def test_wall_set_helpers():
    assert len(all_wall_sets(3)) == 8
    assert random_wall_sets(7, 4, seed=1) == random_wall_sets(7, 4, seed=1)

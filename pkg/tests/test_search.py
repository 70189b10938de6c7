from fractions import Fraction

import numpy as np
import pytest

from antipod import ANTIPODAL, STRICT
from antipod.bounds import known_value
from antipod.geom import GeometryError
from antipod.search import (
    CONVEX_POSITION,
    MAXIMIZE,
    SearchTask,
    float_count,
    float_position_ok,
    search_extremal,
    snap,
    snap_and_verify,
)

CUBE = np.array([[x, y, z] for x in (0, 1) for y in (0, 1) for z in (0, 1)], dtype=float)


def test_snap():
    assert snap(1 / 3, 100) == Fraction(1, 3)
    assert snap(0.1, 10**6) == Fraction(1, 10)
    with pytest.raises(GeometryError):
        snap(float("nan"), 10)


def test_float_estimates():
    assert float_count(CUBE, STRICT) == 4
    assert float_count(CUBE, ANTIPODAL) == 28
    assert float_position_ok(CUBE, "strict")
    with_center = np.vstack([CUBE, [[0.5, 0.5, 0.5]]])
    assert not float_position_ok(with_center, "strict")
    assert not float_position_ok(with_center, CONVEX_POSITION)


def test_snap_and_verify():
    noisy = (CUBE + 1e-9).tolist()
    config, report = snap_and_verify(noisy, 1000, STRICT)
    assert config.points[0] == (0, 0, 0) and report.count == 4
    with pytest.raises(GeometryError):
        snap_and_verify([[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]], 10)
    with pytest.raises(GeometryError):
        snap_and_verify([[0.0, 0.0], [4.0, 0.0], [0.0, 4.0], [1.0, 1.0]], 10)


def test_task_validation():
    with pytest.raises(ValueError):
        SearchTask(3, 3)
    with pytest.raises(ValueError):
        SearchTask(2, 5, objective="sideways")
    assert SearchTask(2, 5).target() == known_value(2, 5)
    assert SearchTask(3, 6, ANTIPODAL, position=CONVEX_POSITION).target() == 6 + 3 - 1
    assert SearchTask(2, 5, ANTIPODAL, MAXIMIZE).target() == 10


@pytest.mark.parametrize("d,n", [(2, 6), (3, 5), (3, 6)])
def test_small_searches_hit_known_minimum(d, n):
    result = search_extremal(SearchTask(d, n, budget=5000, restarts=2, seed=0))
    assert result.verified and result.reached_target
    assert result.best_value == known_value(d, n)
    assert result.report.count == result.best_value


def test_search_is_deterministic():
    task = SearchTask(3, 7, budget=300, restarts=2, seed=4, stop_at=-1)
    r1, r2 = search_extremal(task), search_extremal(task)
    assert r1.best_config.points == r2.best_config.points
    assert r1.history == r2.history


def test_thread_pool_matches_sequential(monkeypatch):
    task = SearchTask(2, 6, budget=400, restarts=3, seed=2, stop_at=-1)
    seq = search_extremal(task)
    monkeypatch.setenv("ANTIPOD_THREADS", "2")
    par = search_extremal(task)
    assert seq.history == par.history and seq.best_config.points == par.best_config.points


def test_snap_float_octahedron():
    pts = [[s * (1.0 if i == j else 0.0) + 3e-8 for j in range(3)] for i in range(3) for s in (1, -1)]
    config, report = snap_and_verify(pts, 1000, STRICT)
    assert sorted(config.points) == sorted(
        tuple(Fraction(s if i == j else 0) for j in range(3)) for i in range(3) for s in (1, -1))
    assert report.count == 3

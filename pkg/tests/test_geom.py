from fractions import Fraction as F

import pytest

from antipod.geom import (
    EQ,
    GE,
    GeometryError,
    LinearSystem,
    Row,
    affine_coordinate_indices,
    affine_dimension,
    as_rational,
    hull_vertices,
    in_hull,
    in_relative_interior,
    lp_witness,
    nullspace,
    rank,
    row_echelon,
    solve_nonneg,
)


def test_as_rational():
    assert as_rational(3) == F(3)
    assert as_rational("-2/5") == F(-2, 5)
    assert as_rational(F(1, 3)) == F(1, 3)
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(TypeError):
        as_rational(True)


def test_rank_and_nullspace():
    vs = [[F(1), F(2), F(3)], [F(2), F(4), F(6)], [F(0), F(1), F(1)]]
    assert rank(vs) == 2
    ns = nullspace(vs)
    assert len(ns) == 1
    for v in vs:
        assert sum(a * b for a, b in zip(v, ns[0])) == 0
    rref, pivots = row_echelon(vs)
    assert pivots == [0, 1]


def test_affine_dimension():
    square_in_3d = [(0, 0, 5), (1, 0, 5), (0, 1, 5), (1, 1, 5)]
    pts = [tuple(F(c) for c in p) for p in square_in_3d]
    assert affine_dimension(pts) == 2
    assert len(affine_coordinate_indices(pts)) == 2
    assert affine_dimension([pts[0]]) == 0


def test_solve_nonneg_feasible_and_infeasible():
    A = [[F(1), F(1)], [F(1), F(-1)]]
    x = solve_nonneg(A, [F(3), F(1)])
    assert x == [F(2), F(1)]
    assert solve_nonneg(A, [F(1), F(3)]) is None  # needs x2 = -1
    assert solve_nonneg([[F(0), F(0)]], [F(0)]) == [F(0), F(0)]


def test_lp_witness_free_variables():
    # x - y >= 1, x + y = 0  ->  x >= 1/2
    system = LinearSystem((Row((1, -1), GE, 1), Row((1, 1), EQ, 0)), 2)
    w = lp_witness(system)
    assert w is not None and system.check(w.values)
    infeasible = LinearSystem((Row((1,), GE, 1), Row((-1,), GE, 0)), 1)
    assert lp_witness(infeasible) is None


def test_linear_system_checks_width():
    with pytest.raises(GeometryError):
        LinearSystem((Row((1, 2), GE, 0),), 3)
    with pytest.raises(GeometryError):
        Row((1,), "<", 0)


def test_hull_membership():
    tri = [(F(0), F(0)), (F(2), F(0)), (F(0), F(2))]
    assert in_hull((F(1), F(1)), tri)
    assert not in_hull((F(2), F(2)), tri)
    assert in_relative_interior((F(1, 2), F(1, 2)), tri)
    assert not in_relative_interior((F(1), F(1)), tri)  # on an edge
    seg = [(F(0), F(0)), (F(2), F(2))]
    assert in_relative_interior((F(1), F(1)), seg)
    assert not in_relative_interior((F(0), F(0)), seg)


def test_hull_vertices_duplicates_and_interior():
    pts = [(F(0), F(0)), (F(4), F(0)), (F(0), F(4)), (F(1), F(1)), (F(4), F(0)), (F(2), F(0))]
    assert hull_vertices(pts) == [0, 1, 2]
    with pytest.raises(GeometryError):
        hull_vertices([(F(0),), (F(1), F(2))])

from fractions import Fraction

import pytest

from antipod import ANTIPODAL, STRICT, PositionClass, count_pairs, position_class
from antipod.constructions import (
    arc_points,
    arcs_product,
    base_polytope,
    bipyramid_triangle,
    build,
    circle_point,
    crosspoly_pyramid,
    crosspoly_pyramid_target,
    gadget_is_strict,
    product_points,
    pyramid_over,
    random_grid_convex,
    random_polygon,
    random_sphere_points,
    regular_ngon,
    simplex_barycenter,
    truncated_crosspolytope,
    verified_counts,
)
from antipod.geom import GeometryError, hull_vertices

from conftest import float_oracle


def test_circle_points_are_on_the_circle():
    for t in (Fraction(0), Fraction(1, 3), Fraction(-7, 5)):
        x, y = circle_point(t)
        assert x * x + y * y == 1


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8])
def test_regular_ngon_parallel_sides(n):
    config = base_polytope("regular_ngon", 2, n)
    assert config.construction["parallel_side_pairs"] == (n // 2 if n % 2 == 0 else 0)
    assert position_class(config) == PositionClass.STRICTLY_CONVEX


def test_regular_ngon_needs_three():
    with pytest.raises(GeometryError):
        regular_ngon(2)


def test_random_generators_are_deterministic():
    assert random_polygon(7, 3).points == random_polygon(7, 3).points
    assert random_sphere_points(3, 6, 4).points == random_sphere_points(3, 6, 4).points
    assert random_grid_convex(3, 7, 2).points == random_grid_convex(3, 7, 2).points


@pytest.mark.parametrize("make", [
    lambda: random_polygon(10, 1),
    lambda: random_sphere_points(4, 9, 2),
    lambda: random_grid_convex(2, 10, 5),
    lambda: random_grid_convex(4, 8, 1),
])
def test_random_generators_strictly_convex(make):
    config = make()
    assert config.is_full_dimensional()
    assert position_class(config) == PositionClass.STRICTLY_CONVEX


def test_pyramid_adds_base_count():
    base = base_polytope("generic_quadrangle")
    pyr = pyramid_over(base)
    assert pyr.dim == 3 and pyr.n == 5
    assert pyr.construction["sa"] == verified_counts(base).sa + base.n == 8


def test_pyramid_rejects_zero_height():
    with pytest.raises(GeometryError):
        pyramid_over(base_polytope("parallelogram"), heights=[0])


@pytest.mark.parametrize("d,k", [(3, 1), (3, 2), (4, 3), (5, 2), (5, 4)])
def test_simplex_barycenter(d, k):
    config = simplex_barycenter(d, k)
    assert config.n == d + k
    assert config.construction["sa"] == config.construction["a"] == d * (d + 1) // 2 + k - 1


@pytest.mark.parametrize("d,k", [(3, 1), (3, 3), (4, 2), (5, 3), (5, 4)])
def test_crosspoly_pyramid(d, k):
    config = crosspoly_pyramid(d, k)
    assert config.n == d + k
    assert config.construction["sa"] == crosspoly_pyramid_target(d, k)


def test_crosspoly_pyramid_5_3_float():
    # the configuration behind upper_bound(5, 3) = 16
    assert float_oracle(crosspoly_pyramid(5, 3).points)[1] == 16


@pytest.mark.parametrize("d,n", [(3, 7), (3, 10), (3, 12), (4, 9), (4, 13)])
def test_truncated_crosspolytope(d, n):
    config = truncated_crosspolytope(d, n)
    assert config.n == n and config.dim == d
    assert position_class(config) == PositionClass.STRICTLY_CONVEX
    assert config.construction["sa"] == 2 * d
    assert float_oracle(config.points)[1] == 2 * d


def test_truncated_crosspolytope_range():
    with pytest.raises(GeometryError):
        truncated_crosspolytope(3, 6)
    with pytest.raises(GeometryError):
        truncated_crosspolytope(3, 13)


def test_bipyramid_variants():
    assert bipyramid_triangle("seven").construction["sa"] == 7
    assert bipyramid_triangle("search_max").construction["sa"] == 10
    for s in range(5):
        assert 7 <= bipyramid_triangle("random", seed=s).construction["sa"] <= 10


def test_arc_gadget():
    sets = arc_points(1, Fraction(1, 8), Fraction(1, 4)) + [[(Fraction(1),) * 3]]
    assert gadget_is_strict(sets)
    pts = product_points(1, sets)
    assert len(pts) == 4


def test_arcs_product_small():
    config = arcs_product(1)
    assert (config.n, config.dim, config.construction["sa"]) == (4, 3, 6)
    padded = arcs_product(1, pad=1)
    assert (padded.n, padded.dim, padded.construction["sa"]) == (5, 4, 10)


def test_arcs_product_points_distinct_per_arc():
    sets = arc_points(4, Fraction(1, 8), Fraction(1, 4)) + [[(Fraction(1),) * 3]]
    pts = product_points(2, sets)
    assert len(set(pts)) == 16
    assert len(hull_vertices(pts)) == 16


def test_build_from_strings():
    config = build("crosspoly_pyramid", {"d": "4", "k": "2"})
    assert config.n == 6
    assert build("pyramid_over", {"base": "trapezoid"}).construction["sa"] == 7
    assert build("random_grid_convex", {"d": "3", "n": "6", "seed": "1"}).n == 6
    with pytest.raises(GeometryError, match="needs parameters"):
        build("crosspoly_pyramid", {"d": "4"})
    with pytest.raises(GeometryError, match="no parameter"):
        build("crosspoly_pyramid", {"d": "4", "k": "2", "z": "1"})
    with pytest.raises(GeometryError, match="unknown construction"):
        build("dodecahedron", {})


def test_construction_counts_match_exact_oracles():
    for config in (pyramid_over(base_polytope("parallelogram"), 2), simplex_barycenter(4, 2)):
        assert count_pairs(config, STRICT).count == config.construction["sa"] == 11
        assert count_pairs(config, ANTIPODAL).count >= 11

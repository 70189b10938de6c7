"""Property tests: invariances and cross-checks on random inputs."""

from fractions import Fraction as F
from itertools import permutations

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from antipod import ANTIPODAL, STRICT, PointConfig, count_pairs, difference_body_counts
from antipod.constructions import pyramid_over, random_polygon, random_sphere_points
from antipod.antipodality import parallel_side_pairs
from antipod.geom import GE, LinearSystem, Row, affine_dimension, hull_vertices, lp_witness
from antipod.io import dumps_config, dumps_family, loads_config, loads_family
from antipod.segments import SEGMENT_KINDS, family_test, segment_construction

SLOW = settings(max_examples=20, deadline=None, suppress_health_check=[HealthCheck.too_slow])

small = st.fractions(min_value=-3, max_value=3, max_denominator=4)
seeds = st.integers(0, 10_000)


def _invertible(d):
    return st.lists(st.lists(st.integers(-3, 3), min_size=d, max_size=d), min_size=d, max_size=d).filter(
        lambda m: affine_dimension([tuple(F(0) for _ in range(d))] + [tuple(F(c) for c in r) for r in m]) == d)


def _counts(config):
    return count_pairs(config, ANTIPODAL).count, count_pairs(config, STRICT).count


@SLOW
@given(seed=seeds, d=st.integers(2, 3), data=st.data())
def test_counts_invariant_under_affine_maps(seed, d, data):
    config = random_sphere_points(d, d + 3, seed)
    matrix = data.draw(_invertible(d))
    shift = data.draw(st.lists(small, min_size=d, max_size=d))
    assert _counts(config.map_affine(matrix, shift)) == _counts(config)


@SLOW
@given(seed=seeds, d=st.integers(2, 4))
def test_oracles_agree(seed, d):
    config = random_sphere_points(d, d + 1 + seed % 4, seed)
    db = difference_body_counts(config)
    assert (db.a, db.sa) == _counts(config)


@SLOW
@given(seed=seeds)
def test_strict_pairs_are_a_subset(seed):
    config = random_sphere_points(3, 7, seed)
    assert set(count_pairs(config, STRICT).pairs) <= set(count_pairs(config, ANTIPODAL).pairs)


@SLOW
@given(seed=seeds, n=st.integers(3, 12))
def test_planar_law(seed, n):
    config = random_polygon(n, seed)
    k = parallel_side_pairs(config)
    assert _counts(config) == (n + k, n - k)


@SLOW
@given(seed=seeds, h=st.fractions(min_value=F(1, 8), max_value=4))
def test_pyramid_adds_n_strict_pairs(seed, h):
    base = random_polygon(3 + seed % 5, seed)
    pyr = pyramid_over(base, heights=[h])
    assert count_pairs(pyr, STRICT).count == count_pairs(base, STRICT).count + base.n


@SLOW
@given(seed=seeds)
def test_hull_vertices_permutation_invariant(seed):
    pts = list(random_sphere_points(3, 6, seed).points)
    pts.append(tuple(sum(c) / len(pts) for c in zip(*pts)))  # centroid, never a vertex
    base = {pts[i] for i in hull_vertices(pts)}
    for perm in list(permutations(range(len(pts))))[:: 997]:
        shuffled = [pts[i] for i in perm]
        assert {shuffled[i] for i in hull_vertices(shuffled)} == base
    assert len(base) == 6


@settings(max_examples=60, deadline=None)
@given(rows=st.lists(st.tuples(st.lists(small, min_size=3, max_size=3), small), min_size=1, max_size=6))
def test_lp_witness_substitutes(rows):
    system = LinearSystem(tuple(Row(c, GE, b) for c, b in rows), 3)
    w = lp_witness(system)
    if w is not None:
        assert all(sum(a * x for a, x in zip(r.coeffs, w.values)) >= r.rhs for r in system.rows)


@settings(max_examples=40, deadline=None)
@given(pts=st.lists(st.tuples(small, small, small), min_size=4, max_size=8, unique=True))
def test_config_round_trip(pts):
    config = PointConfig.from_points(pts)
    assert loads_config(dumps_config(config)).points == config.points


@SLOW
@given(kind=st.sampled_from(sorted(SEGMENT_KINDS)), data=st.data())
def test_segment_families_affine_invariant(kind, data):
    family = segment_construction(kind)
    matrix = data.draw(_invertible(3))
    mapped = family.map_affine(matrix, [1, -2, F(1, 3)])
    assert family_test(mapped, SEGMENT_KINDS[kind])[0]
    assert loads_family(dumps_family(mapped)).segments == mapped.segments


@SLOW
@given(kind=st.sampled_from(["prism_three", "skew_interior_three"]), margin=st.fractions(F(1, 64), F(7, 16)))
def test_shrinking_keeps_strictness(kind, margin):
    family = segment_construction(kind).shrink(margin)
    assert family_test(family, STRICT)[0]

"""Antipodal and strictly antipodal pairs of a finite point set.

Two independent routes count pairs:

* :func:`count_pairs` solves one supporting-slab LP per pair;
* :func:`difference_body_counts` works on the difference set X - X, using
  that sa(X) is half the vertex count of P - P and that a pair is antipodal
  exactly when its difference lies on the boundary of P - P.
"""

from __future__ import annotations

import enum
import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .geom import (
    GE,
    GeometryError,
    LinearSystem,
    Row,
    affine_coordinate_indices,
    affine_dimension,
    as_point,
    dot,
    hull_vertices,
    in_relative_interior,
    lp_witness,
    solve_nonneg,
)

ANTIPODAL = "antipodal"
STRICT = "strict"
MODES = (ANTIPODAL, STRICT)


@dataclass(frozen=True)
class PointConfig:
    """A labelled finite set of distinct rational points in R^dim."""

    dim: int
    points: tuple
    label: str | None = None
    construction: dict | None = field(default=None, compare=False)

    def __post_init__(self):
        pts = tuple(as_point(p) for p in self.points)
        if not pts:
            raise GeometryError("a configuration needs at least one point")
        for k, p in enumerate(pts):
            if len(p) != self.dim:
                raise GeometryError(f"point {k} has {len(p)} coordinates, expected {self.dim}")
        if len(set(pts)) != len(pts):
            raise GeometryError("points must be distinct")
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_points(cls, points, label=None, construction=None) -> "PointConfig":
        pts = [as_point(p) for p in points]
        return cls(len(pts[0]), tuple(pts), label, construction)

    @property
    def n(self) -> int:
        return len(self.points)

    def affine_dimension(self) -> int:
        return affine_dimension(self.points)

    def is_full_dimensional(self) -> bool:
        return self.affine_dimension() == self.dim

    def map_affine(self, matrix, shift=None) -> "PointConfig":
        """Image under x -> matrix @ x + shift (exact)."""
        shift = shift or [0] * len(matrix)
        pts = [tuple(dot(row, p) + s for row, s in zip(matrix, shift)) for p in self.points]
        return PointConfig.from_points(pts, self.label)

    def reembed(self) -> "PointConfig":
        """Same set, coordinatized in its own affine hull (dim = affine dimension)."""
        idx = affine_coordinate_indices(self.points)
        pts = [tuple(p[c] for c in idx) for p in self.points]
        return PointConfig(len(idx), tuple(pts), self.label, self.construction)


@dataclass(frozen=True)
class Certificate:
    """Direction u with <u, x_i> = hi and <u, x_j> = lo bounding the slab."""

    direction: tuple
    hi: Fraction
    lo: Fraction

    def validates(self, config: PointConfig, i: int, j: int, mode: str) -> bool:
        u = self.direction
        if not self.hi > self.lo:
            return False
        if dot(u, config.points[i]) != self.hi or dot(u, config.points[j]) != self.lo:
            return False
        for k, x in enumerate(config.points):
            h = dot(u, x)
            if not self.lo <= h <= self.hi:
                return False
            if mode == STRICT and k not in (i, j) and not self.lo < h < self.hi:
                return False
        return True


@dataclass
class PairReport:
    mode: str
    count: int
    pairs: list
    certificates: dict


class PositionClass(str, enum.Enum):
    STRICTLY_CONVEX = "strictly_convex"
    CONVEX_NOT_STRICT = "convex_not_strict"
    NOT_CONVEX = "not_convex"


@dataclass(frozen=True)
class DifferenceBodyCounts:
    a: int
    sa: int
    db_vertices: int


def _require_full(config: PointConfig):
    if not config.is_full_dimensional():
        raise GeometryError(
            f"affine hull has dimension {config.affine_dimension()} < {config.dim}; "
            "re-embed the configuration first")


def _check_mode(mode: str):
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def _pair_system(config: PointConfig, i: int, j: int, mode: str) -> LinearSystem:
    xi, xj = config.points[i], config.points[j]
    rows = []
    if mode == ANTIPODAL:
        for k, x in enumerate(config.points):
            if k != i:
                rows.append(Row([a - b for a, b in zip(xi, x)], GE, 0))
            if k != j:
                rows.append(Row([a - b for a, b in zip(x, xj)], GE, 0))
        rows.append(Row([a - b for a, b in zip(xi, xj)], GE, 1))
    else:
        # "> 0" becomes ">= 1": u is only defined up to positive scaling
        for k, x in enumerate(config.points):
            if k != i:
                rows.append(Row([a - b for a, b in zip(xi, x)], GE, 1))
            if k != j:
                rows.append(Row([a - b for a, b in zip(x, xj)], GE, 1))
    return LinearSystem(tuple(rows), config.dim)


def pair_test(config: PointConfig, i: int, j: int, mode: str = STRICT) -> Certificate | None:
    """Certificate that x_i, x_j are (strictly) antipodal, or None."""
    _check_mode(mode)
    if i == j:
        raise ValueError("a pair needs two different indices")
    _require_full(config)
    w = lp_witness(_pair_system(config, i, j, mode))
    if w is None:
        return None
    u = w.values
    cert = Certificate(u, dot(u, config.points[i]), dot(u, config.points[j]))
    if not cert.validates(config, i, j, mode):
        raise RuntimeError(f"certificate for pair ({i}, {j}) failed validation")
    return cert


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("ANTIPOD_THREADS", "1")))
    except ValueError:
        return 1


def _pair_job(args):
    config, i, j, mode = args
    return pair_test(config, i, j, mode)


def count_pairs(config: PointConfig, mode: str = STRICT, n_jobs: int | None = None) -> PairReport:
    """Exhaustive pair LP over all C(n, 2) pairs, in lexicographic order.

    ``n_jobs`` (default: ANTIPOD_THREADS, else 1) spreads the pairs over
    worker processes; results are merged back in pair order.
    """
    _check_mode(mode)
    _require_full(config)
    pairs = list(combinations(range(config.n), 2))
    n_jobs = n_jobs or _workers()
    if n_jobs > 1 and len(pairs) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(n_jobs) as pool:
            certs = list(pool.map(_pair_job, [(config, i, j, mode) for i, j in pairs], chunksize=8))
    else:
        certs = [pair_test(config, i, j, mode) for i, j in pairs]
    found = [(p, c) for p, c in zip(pairs, certs) if c is not None]
    return PairReport(mode, len(found), [p for p, _ in found], dict(found))


def difference_body_counts(config: PointConfig) -> DifferenceBodyCounts:
    """Counts read off the difference body P - P.

    sa is half the number of vertices of conv(X - X); a is the number of
    pairs whose difference is not in the interior of conv(X - X).
    """
    _require_full(config)
    pts = config.points
    diffs = []
    for p in pts:
        for q in pts:
            if p is not q:
                diffs.append(tuple(a - b for a, b in zip(p, q)))
    verts_idx = hull_vertices(diffs)
    verts = [diffs[k] for k in verts_idx]
    a = 0
    for i, j in combinations(range(config.n), 2):
        z = tuple(x - y for x, y in zip(pts[i], pts[j]))
        if not in_relative_interior(z, verts):
            a += 1
    nv = len(verts)
    if nv % 2:
        raise RuntimeError("difference body has an odd vertex count")
    return DifferenceBodyCounts(a, nv // 2, nv)


def position_class(config: PointConfig) -> PositionClass:
    """Position of X relative to P = conv X, taken inside aff X."""
    verts = hull_vertices(config.points)
    if len(verts) == config.n:
        return PositionClass.STRICTLY_CONVEX
    vpts = [config.points[k] for k in verts]
    vs = set(verts)
    for k, x in enumerate(config.points):
        if k not in vs and in_relative_interior(x, vpts):
            return PositionClass.NOT_CONVEX
    return PositionClass.CONVEX_NOT_STRICT


# ---------------------------------------------------------------------------
# Projections


def linear_projection(config: PointConfig, direction: Sequence[Fraction]) -> tuple[list[tuple], int]:
    """Project along ``direction`` onto R^(dim-1).

    Uses x -> x - (x_m / L_m) L with coordinate m dropped, a linear map whose
    kernel is span(L).  It differs from the orthogonal projection by an
    invertible linear map, which no count here can see.
    """
    L = [Fraction(c) for c in direction]
    m = next((c for c in range(len(L)) if L[c] != 0), None)
    if m is None:
        raise GeometryError("projection direction is zero")
    out = []
    for x in config.points:
        t = x[m] / L[m]
        y = tuple(x[c] - t * L[c] for c in range(len(L)) if c != m)
        out.append(y)
    return out, m


@dataclass
class Projection:
    image: PointConfig
    fiber_map: list  # X index -> image index, or None if not sent to a vertex
    direction: tuple


def project_at_vertex(config: PointConfig, apex: int, seed: int = 0, max_tries: int = 64) -> Projection:
    """Project X along a generic line through ``apex`` and an interior point.

    The image is the vertex set of the projected polytope; the apex lands in
    its relative interior.  Directions are perturbed deterministically from
    ``seed`` until the apex image is interior and no two points collapse.
    """
    if config.dim < 2:
        raise GeometryError("need dim >= 2 to project")
    _require_full(config)
    verts = hull_vertices(config.points)
    if apex not in verts:
        raise GeometryError(f"point {apex} is not a vertex")
    n = config.n
    centroid = [sum(p[c] for p in config.points) / n for c in range(config.dim)]
    base = [c - a for c, a in zip(centroid, config.points[apex])]
    rng = random.Random(seed)
    for attempt in range(max_tries):
        if attempt == 0 and seed == 0:
            direction = tuple(base)
        else:
            scale = Fraction(1, 8 * (attempt + 1))
            direction = tuple(b + scale * Fraction(rng.randint(-64, 64), 64) for b in base)
        if all(c == 0 for c in direction):
            continue
        imgs, _ = linear_projection(config, direction)
        if len(set(imgs)) != n:
            continue
        vidx = hull_vertices(imgs)
        if apex in vidx:
            continue
        vpts = [imgs[k] for k in vidx]
        if not in_relative_interior(imgs[apex], vpts):
            continue
        image = PointConfig(config.dim - 1, tuple(vpts), config.label)
        pos = {k: r for r, k in enumerate(vidx)}
        fiber_map = [pos.get(k) for k in range(n)]
        return Projection(image, fiber_map, direction)
    raise GeometryError(f"no generic projection direction found in {max_tries} tries")


def coordinate_projection(config: PointConfig) -> tuple[PointConfig, list[list[int]]]:
    """Drop the last coordinate; returns the image and the fiber over each image point."""
    fibers: dict = {}
    for k, p in enumerate(config.points):
        fibers.setdefault(p[:-1], []).append(k)
    keys = list(fibers)
    return PointConfig(config.dim - 1, tuple(keys), config.label), [fibers[key] for key in keys]


def fiber_extremes(config: PointConfig, fiber: Sequence[int]) -> tuple[int, int]:
    """(highest, lowest) index in a vertical fiber, by last coordinate."""
    ordered = sorted(fiber, key=lambda k: config.points[k][-1])
    return ordered[-1], ordered[0]


def unique_max_chord(config: PointConfig, i: int, j: int) -> bool:
    """Whether [x_i, x_j] is the only longest chord of P in its direction.

    Assumes both endpoints are vertices.  The chord is unique exactly when the
    support cones of P at x_i and at x_j meet only in the origin, i.e. when
    ``sum l_k (x_k - x_i) = sum m_k (x_k - x_j)`` with ``l, m >= 0`` forces
    ``l = 0``.
    """
    xi, xj = config.points[i], config.points[j]
    others_i = [k for k in range(config.n) if k != i]
    others_j = [k for k in range(config.n) if k != j]
    cols = [[x - y for x, y in zip(config.points[k], xi)] for k in others_i]
    cols += [[y - x for x, y in zip(config.points[k], xj)] for k in others_j]
    A = [[col[c] for col in cols] for c in range(config.dim)]
    A.append([Fraction(1)] * len(others_i) + [Fraction(0)] * len(others_j))
    b = [Fraction(0)] * config.dim + [Fraction(1)]
    return solve_nonneg(A, b) is None


def strict_degrees(report: PairReport, n: int) -> list[int]:
    deg = [0] * n
    for i, j in report.pairs:
        deg[i] += 1
        deg[j] += 1
    return deg


def parallel_side_pairs(config: PointConfig) -> int:
    """Number of parallel pairs of sides of a strictly convex polygon."""
    if config.dim != 2:
        raise GeometryError("parallel sides are counted for planar polygons")
    verts = hull_vertices(config.points)
    if len(verts) != config.n:
        raise GeometryError("polygon vertices must be in strictly convex position")
    pts = config.points
    cx = sum(p[0] for p in pts) / len(pts)
    cy = sum(p[1] for p in pts) / len(pts)
    order = sorted(range(len(pts)), key=lambda k: _angle_key(pts[k][0] - cx, pts[k][1] - cy))
    sides = [
        (pts[order[(t + 1) % len(order)]][0] - pts[order[t]][0],
         pts[order[(t + 1) % len(order)]][1] - pts[order[t]][1])
        for t in range(len(order))
    ]
    return sum(1 for s, t in combinations(sides, 2) if s[0] * t[1] - s[1] * t[0] == 0)


def _angle_key(x: Fraction, y: Fraction):
    # exact angular order: half-plane, then the cross-product order inside it
    half = 0 if (y > 0 or (y == 0 and x > 0)) else 1
    return (half, _CrossKey(x, y))


class _CrossKey:
    __slots__ = ("x", "y")

    def __init__(self, x, y):
        self.x, self.y = x, y

    def __lt__(self, other):
        return self.x * other.y - self.y * other.x > 0

    def __eq__(self, other):
        return self.x * other.y - self.y * other.x == 0

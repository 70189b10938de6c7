"""Named extremal configurations with exact coordinates.

Every public generator checks its output with the pair oracles before
returning it: the pair LP and the difference-body count must both hit the
advertised value.  Parameters the geometry only describes as "small" are
halved until that check passes.
"""

from __future__ import annotations

import inspect
import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from .antipodality import (
    ANTIPODAL,
    STRICT,
    PointConfig,
    PositionClass,
    count_pairs,
    difference_body_counts,
    pair_test,
    parallel_side_pairs,
    position_class,
)
from .geom import GeometryError, nullspace

MAX_HALVINGS = 40


class ConstructionError(RuntimeError):
    """A generator could not reach its verified target."""


@dataclass(frozen=True)
class ConstructionSpec:
    name: str
    params: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"name": self.name, "params": {k: _plain(v) for k, v in self.params.items()}}


def _plain(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return v


@dataclass(frozen=True)
class Counts:
    """Pair counts of a configuration, agreed on by both oracles."""

    sa: int
    db_vertices: int
    a: int | None = None


def verified_counts(config: PointConfig, with_a: bool = False) -> Counts:
    """Count pairs with both oracles and insist they agree."""
    db = difference_body_counts(config)
    sa = count_pairs(config, STRICT).count
    if sa != db.sa:
        raise ConstructionError(f"oracles disagree on sa: pair LP {sa}, difference body {db.sa}")
    a = None
    if with_a:
        a = count_pairs(config, ANTIPODAL).count
        if a != db.a:
            raise ConstructionError(f"oracles disagree on a: pair LP {a}, difference body {db.a}")
    return Counts(sa, db.db_vertices, a)


def _finish(points, name: str, params: dict, label: str | None = None) -> PointConfig:
    spec = ConstructionSpec(name, params)
    return PointConfig.from_points(points, label or name, spec.as_dict())


def _unit(d: int, i: int, sign: int = 1) -> tuple:
    return tuple(Fraction(sign if c == i else 0) for c in range(d))


def _centroid(points: Sequence[Sequence[Fraction]]) -> tuple:
    n = len(points)
    return tuple(sum(p[c] for p in points) / n for c in range(len(points[0])))


def _float_convex(points) -> bool:
    """Cheap prefilter: qhull sees every point as a vertex (or the set is flat)."""
    try:
        return len(ConvexHull(np.array(points, dtype=float)).vertices) == len(points)
    except (QhullError, ValueError):
        return True


def _strictly_convex(config: PointConfig) -> bool:
    return position_class(config) == PositionClass.STRICTLY_CONVEX


# ---------------------------------------------------------------------------
# Base polytopes

QUADRANGLES = {
    "parallelogram": [(0, 0), (2, 0), (3, 1), (1, 1)],
    "trapezoid": [(0, 0), (3, 0), (2, 1), (1, 1)],
    "generic_quadrangle": [(0, 0), (3, 0), (2, 2), (0, 1)],
}
BASE_KINDS = ("simplex", "cross_polytope", "cube", "regular_ngon") + tuple(QUADRANGLES)


def circle_point(t: Fraction) -> tuple:
    """Rational point of the unit circle with tangent half-angle t."""
    s = 1 + t * t
    return ((1 - t * t) / s, 2 * t / s)


def _half_angle(theta: float, den: int = 1000) -> Fraction:
    return Fraction(math.tan(theta / 2)).limit_denominator(den)


def regular_ngon(n: int) -> list[tuple]:
    """Rational points near the regular n-gon, all on the unit circle.

    For even n the set is centrally symmetric, so opposite sides are exactly
    parallel; for odd n no two sides are parallel.
    """
    if n < 3:
        raise GeometryError("a polygon needs n >= 3")
    if n % 2 == 0:
        half = [circle_point(_half_angle(math.pi * (2 * m + 1) / n)) for m in range(n // 2)]
        return half + [(-x, -y) for x, y in half]
    for den in (1000, 997, 1009, 991, 1013):
        pts = [circle_point(_half_angle(math.pi * (4 * m + 1) / (2 * n), den)) for m in range(n)]
        if len(set(pts)) == n and parallel_side_pairs(PointConfig.from_points(pts)) == 0:
            return pts
    raise ConstructionError(f"could not place a rational {n}-gon without parallel sides")


def base_polytope(kind: str, d: int = 2, n: int | None = None) -> PointConfig:
    """Standard vertex sets: simplex {0, e_i}, cross-polytope {±e_i}, cube {0,1}^d,
    a rational regular n-gon, or one of three fixed quadrangles."""
    if kind not in BASE_KINDS:
        raise GeometryError(f"unknown base kind {kind!r}; choose from {', '.join(BASE_KINDS)}")
    if d < 1:
        raise GeometryError("dimension must be positive")
    params = {"kind": kind, "d": d}
    if kind == "simplex":
        pts = [tuple(Fraction(0) for _ in range(d))] + [_unit(d, i) for i in range(d)]
    elif kind == "cross_polytope":
        pts = [_unit(d, i, s) for i in range(d) for s in (1, -1)]
    elif kind == "cube":
        pts = [tuple(Fraction(b) for b in bits) for bits in itertools.product((0, 1), repeat=d)]
    else:
        if d != 2:
            raise GeometryError(f"{kind} lives in the plane (d = 2), got d = {d}")
        if kind == "regular_ngon":
            if n is None:
                raise GeometryError("regular_ngon needs n")
            pts = regular_ngon(n)
            params["n"] = n
        else:
            pts = QUADRANGLES[kind]
    config = _finish(pts, "base_polytope", params, kind)
    if kind == "regular_ngon":
        config.construction["parallel_side_pairs"] = parallel_side_pairs(config)
    return config


def random_polygon(n: int, seed: int, den: int = 64) -> PointConfig:
    """A random rational convex n-gon inscribed in the unit circle.

    A random number of vertices come in antipodal pairs, which produces a
    varying number of parallel side pairs; the exact count is recorded.
    """
    if n < 3:
        raise GeometryError("a polygon needs n >= 3")
    rng = random.Random(seed)
    m = rng.randint(0, n // 2)
    pts: set = set()
    while len(pts) < 2 * m:
        x, y = circle_point(Fraction(rng.randint(-4 * den, 4 * den), den))
        pts.update({(x, y), (-x, -y)})
    while len(pts) < n:
        pts.add(circle_point(Fraction(rng.randint(-4 * den, 4 * den), den)))
    pts = sorted(pts)
    config = _finish(pts, "random_polygon", {"n": n, "seed": seed})
    config.construction["parallel_side_pairs"] = parallel_side_pairs(config)
    return config


def sphere_point(y: Sequence[Fraction]) -> tuple:
    """Inverse stereographic image of y in R^(d-1) on the unit sphere of R^d."""
    s = sum(c * c for c in y)
    return tuple(2 * c / (s + 1) for c in y) + ((s - 1) / (s + 1),)


def random_sphere_points(d: int, n: int, seed: int, den: int = 8) -> PointConfig:
    """n random rational points on the unit sphere of R^d (strictly convex)."""
    if n < d + 1:
        raise GeometryError("need n >= d + 1 points to span R^d")
    rng = random.Random(seed)
    for _ in range(1000):
        pts: set = set()
        while len(pts) < n:
            y = [Fraction(rng.randint(-3 * den, 3 * den), den) for _ in range(d - 1)]
            pts.add(sphere_point(y))
        config = _finish(sorted(pts), "random_sphere_points", {"d": d, "n": n, "seed": seed})
        if config.is_full_dimensional():
            return config
    raise ConstructionError("random points never spanned R^d")


def random_grid_convex(d: int, n: int, seed: int, grid: int | None = None) -> PointConfig:
    """n integer points of [-grid, grid]^d in strictly convex position.

    The default grid is 3, widened to n // 2 in the plane where a 7 x 7
    grid holds few large convex polygons.

    Points are added one at a time and kept only if the set stays strictly
    convex, so parallel edges and coplanar facets occur often.
    """
    if n < d + 1:
        raise GeometryError("need n >= d + 1 points to span R^d")
    if grid is None:
        grid = max(3, n // 2) if d == 2 else 3
    rng = random.Random(seed)
    for _ in range(200):
        pts: list = []
        for _ in range(50 * n):
            p = tuple(Fraction(rng.randint(-grid, grid)) for _ in range(d))
            if p in pts:
                continue
            trial = pts + [p]
            if len(trial) <= d or (_float_convex(trial) and _strictly_convex(PointConfig.from_points(trial))):
                pts = trial
            if len(pts) == n:
                break
        if len(pts) == n:
            config = _finish(pts, "random_grid_convex", {"d": d, "n": n, "seed": seed, "grid": grid})
            if config.is_full_dimensional():
                return config
    raise ConstructionError(f"no {n} strictly convex grid points found in dimension {d}")


# ---------------------------------------------------------------------------
# Pyramids, simplices and cross-polytopes


def pyramid_over(base: PointConfig, times: int = 1, heights: Sequence | None = None) -> PointConfig:
    """Iterated pyramid: each step lifts the set into one more dimension and adds
    an apex above the centroid.  Each step adds |before| strict pairs."""
    if times < 1:
        raise GeometryError("times must be >= 1")
    heights = [Fraction(h) for h in (heights or [1] * times)]
    if len(heights) != times:
        raise GeometryError(f"need {times} heights, got {len(heights)}")
    if any(h == 0 for h in heights):
        raise GeometryError("apex heights must be nonzero")
    if not base.is_full_dimensional():
        base = base.reembed()
    if not _strictly_convex(base):
        raise GeometryError("pyramid base must be in strictly convex position")
    sa = verified_counts(base).sa
    pts = list(base.points)
    for h in heights:
        apex = _centroid(pts) + (h,)
        pts = [p + (Fraction(0),) for p in pts] + [apex]
        step = PointConfig.from_points(pts)
        new_sa = verified_counts(step).sa
        if new_sa - sa != len(pts) - 1:
            raise ConstructionError(f"pyramid step added {new_sa - sa} strict pairs, expected {len(pts) - 1}")
        sa = new_sa
    params = {"base": base.label or "base", "times": times, "heights": heights}
    config = _finish(pts, "pyramid_over", params, f"{times}-fold pyramid over {base.label or 'base'}")
    config.construction["sa"] = sa
    return config


def simplex_barycenter_target(d: int, k: int) -> int:
    return d * (d + 1) // 2 + k - 1


def simplex_barycenter(d: int, k: int, eps0: Fraction = Fraction(1, 4), seed: int = 0) -> PointConfig:
    """Simplex {0, e_i} plus k - 1 points just outside barycentres of distinct facets.

    Both a and sa equal d(d+1)/2 + k - 1.  The offset starts at eps0 and is
    halved until the configuration is strictly convex and hits that count.
    """
    if d < 2 or not 1 <= k <= d + 2:
        raise GeometryError(f"need d >= 2 and 1 <= k <= d + 2, got d = {d}, k = {k}")
    eps = Fraction(eps0)
    if eps <= 0:
        raise GeometryError("eps0 must be positive")
    simplex = list(base_polytope("simplex", d).points)
    c = _centroid(simplex)
    facets = sorted(random.Random(seed).sample(range(d + 1), k - 1))
    bary = [_centroid([p for q, p in enumerate(simplex) if q != f]) for f in facets]
    target = simplex_barycenter_target(d, k)
    for _ in range(MAX_HALVINGS):
        extra = [tuple(b[i] + eps * (b[i] - c[i]) for i in range(d)) for b in bary]
        config = _finish(simplex + extra, "simplex_barycenter",
                         {"d": d, "k": k, "eps": eps, "seed": seed, "facets": facets})
        if _strictly_convex(config):
            counts = verified_counts(config, with_a=True)
            if counts.sa == target and counts.a == target:
                config.construction.update(sa=counts.sa, a=counts.a)
                return config
        eps /= 2
    raise ConstructionError(f"simplex_barycenter({d}, {k}) missed sa = {target} after {MAX_HALVINGS} halvings")


def crosspoly_pyramid_target(d: int, k: int) -> int:
    return k + (d - k) * (d + 3 * k - 1) // 2


def crosspoly_pyramid(d: int, k: int) -> PointConfig:
    """{±e_1, ..., ±e_k, e_(k+1), ..., e_d}: a (d-k)-fold pyramid over a k-cross-polytope."""
    if not 1 <= k <= d:
        raise GeometryError(f"need 1 <= k <= d, got d = {d}, k = {k}")
    pts = [_unit(d, i, s) for i in range(k) for s in (1, -1)] + [_unit(d, i) for i in range(k, d)]
    config = _finish(pts, "crosspoly_pyramid", {"d": d, "k": k})
    target = crosspoly_pyramid_target(d, k)
    counts = verified_counts(config)
    if counts.sa != target:
        raise ConstructionError(f"crosspoly_pyramid({d}, {k}) has sa = {counts.sa}, expected {target}")
    config.construction["sa"] = counts.sa
    return config


# ---------------------------------------------------------------------------
# Truncated cross-polytope


def truncated_crosspolytope(d: int, n: int, seed: int = 0, t0: Fraction = Fraction(1, 4)) -> PointConfig:
    """Strictly convex n points in R^d with exactly 2d strict pairs, 2d+1 <= n <= 4d.

    Start from conv{±e_i, v} with v = (1/(d-2), ...), and cut it by a plane H-
    near the face conv{-e_i}.  H- passes through k of the -e_i and through
    points at parameter t on the edges from -e_j to -v for the others, so it
    leaves d - k new vertices.  For n <= 3d + 1 the apex v is kept and
    k = 3d + 1 - n; beyond that v is cut off by a plane parallel to H- that
    creates d vertices on the edges [e_i, v], and k = 4d - n.  The count
    |vert(P - P)| = 4d is checked exactly; t is halved on failure.
    """
    if d < 3:
        raise GeometryError("truncated cross-polytope needs d >= 3")
    if not 2 * d + 1 <= n <= 4 * d:
        raise GeometryError(f"n must lie in [{2 * d + 1}, {4 * d}], got {n}")
    keep_apex = n <= 3 * d + 1
    k = 3 * d + 1 - n if keep_apex else 4 * d - n
    chosen = sorted(random.Random(seed).sample(range(d), k))
    v = tuple(Fraction(1, d - 2) for _ in range(d))
    e = [_unit(d, i) for i in range(d)]
    t = Fraction(t0)
    for _ in range(MAX_HALVINGS):
        aux = [tuple(-((1 - t) * e[j][c] + t * v[c]) for c in range(d)) for j in range(d) if j not in chosen]
        on_plane = [tuple(-x for x in e[i]) for i in chosen] + aux
        normal = nullspace([list(p) + [Fraction(-1)] for p in on_plane], d + 1)
        if len(normal) != 1:
            t /= 2
            continue
        w = normal[0][:d]
        if sum(w) < 0:
            w = [-x for x in w]
        pts = e + [tuple(-x for x in p) for p in e] + aux
        if keep_apex:
            pts.append(v)
        else:
            wv = sum(a * b for a, b in zip(w, v))
            cut = (wv + max(w)) / 2
            for i in range(d):
                s = (cut - w[i]) / (wv - w[i])
                pts.append(tuple(e[i][c] + s * (v[c] - e[i][c]) for c in range(d)))
        config = _finish(pts, "truncated_crosspolytope", {"d": d, "n": n, "seed": seed, "t": t, "cut_through": chosen})
        if config.n == n and _strictly_convex(config):
            counts = verified_counts(config)
            if counts.db_vertices == 4 * d and counts.sa == 2 * d:
                config.construction.update(sa=counts.sa, db_vertices=counts.db_vertices)
                return config
        t /= 2
    raise ConstructionError(f"truncated_crosspolytope({d}, {n}) not reached after {MAX_HALVINGS} halvings")


# ---------------------------------------------------------------------------
# Bipyramids over a triangle

TRIANGLE = [(Fraction(0),) * 3, (Fraction(1), Fraction(0), Fraction(0)), (Fraction(0), Fraction(1), Fraction(0))]
BIPYRAMID_VARIANTS = ("seven", "search_max", "random")


def _is_bipyramid(p: Sequence[Fraction], q: Sequence[Fraction]) -> bool:
    """Whether [p, q] crosses the open base triangle (z = 0, x, y > 0, x + y < 1)."""
    if not p[2] > 0 > q[2]:
        return False
    s = p[2] / (p[2] - q[2])
    x = p[0] + s * (q[0] - p[0])
    y = p[1] + s * (q[1] - p[1])
    return x > 0 and y > 0 and x + y < 1


def _random_apexes(rng: random.Random, den: int = 16):
    def r(lo, hi):
        return Fraction(rng.randint(lo * den, hi * den), den)
    p = (r(-1, 1), r(-1, 1), r(1, 8) / 4)
    q = (r(-1, 1), r(-1, 1), -r(1, 8) / 4)
    return p, q


def bipyramid_triangle(variant: str = "seven", eps: Fraction = Fraction(1, 4), seed: int = 0,
                       max_trials: int = 5000) -> PointConfig:
    """Five points: a triangle and one apex on each side of its plane.

    ``seven``: a regular tetrahedron (affinely) with a flat pyramid of height
    eps glued to its base, eps halved until sa = 7.  ``search_max``: seeded
    random search over apex positions until sa = 10.  ``random``: the first
    seeded random bipyramid in strictly convex position, whatever its sa.
    """
    if variant not in BIPYRAMID_VARIANTS:
        raise GeometryError(f"unknown bipyramid variant {variant!r}")
    if variant == "seven":
        eps = Fraction(eps)
        if eps <= 0:
            raise GeometryError("eps must be positive")
        top = (Fraction(1, 3), Fraction(1, 3), Fraction(1))
        for _ in range(MAX_HALVINGS):
            bottom = (Fraction(1, 3), Fraction(1, 3), -eps)
            config = _finish(TRIANGLE + [top, bottom], "bipyramid_triangle", {"variant": variant, "eps": eps})
            counts = verified_counts(config)
            if counts.sa == 7:
                config.construction["sa"] = 7
                return config
            eps /= 2
        raise ConstructionError("flat bipyramid never reached sa = 7")
    rng = random.Random(seed)
    for trial in range(max_trials):
        p, q = _random_apexes(rng)
        if not _is_bipyramid(p, q):
            continue
        config = _finish(TRIANGLE + [p, q], "bipyramid_triangle", {"variant": variant, "seed": seed, "trial": trial})
        if not _strictly_convex(config):
            continue
        counts = verified_counts(config)
        if variant == "random" or counts.sa == 10:
            config.construction["sa"] = counts.sa
            return config
    raise ConstructionError(f"bipyramid search ({variant}) failed after {max_trials} trials")


# ---------------------------------------------------------------------------
# Products of the four-set gadget

# three mutually skew edges of [-1, 1]^3, each as (edge direction a, unit
# midpoint offset b); the edge is {X a + b : -1 <= X <= 1}
SKEW_EDGES = (
    ((1, 0, 0), (0, 1, -1)),
    ((0, 1, 0), (-1, 0, 1)),
    ((0, 0, 1), (1, -1, 0)),
)
GADGET_CORNER = (1, 1, 1)


def arc_points(m: int, bend: Fraction, spread: Fraction) -> list[list[tuple]]:
    """m rational points on each of three arcs bowing outward from skew cube edges.

    The arc over edge (a, b) is X a + (1 + bend (1 - X^2)) b: it joins the
    edge's endpoints inside the plane through 0 and the edge, and its concave
    side faces 0.  Points sit at X in (-spread, spread).
    """
    arcs = []
    for a, b in SKEW_EDGES:
        pts = []
        for i in range(m):
            X = spread * (Fraction(2 * i + 1, m) - 1)
            h = 1 + bend * (1 - X * X)
            pts.append(tuple(X * a[c] + h * b[c] for c in range(3)))
        arcs.append(pts)
    return arcs


def gadget_is_strict(sets: Sequence[Sequence[tuple]]) -> bool:
    """Whether every pair of points from different sets is strictly antipodal
    with respect to the union."""
    pts = [p for s in sets for p in s]
    owner = [k for k, s in enumerate(sets) for _ in s]
    config = PointConfig.from_points(pts)
    return all(pair_test(config, i, j, STRICT) is not None
               for i, j in itertools.combinations(range(len(pts)), 2) if owner[i] != owner[j])


def product_points(k: int, sets: Sequence[Sequence[tuple]]) -> list[tuple]:
    """One point in sigma_(1 i_1) + ... + sigma_(k i_k) per index word (i_1..i_k).

    On factor l the arc point is picked by the word with letter l removed, so
    the 4^(k-1) words that project into one arc all use different points.
    """
    pts = []
    for word in itertools.product(range(4), repeat=k):
        x: tuple = ()
        for l in range(k):
            if word[l] == 3:
                x += sets[3][0]
            else:
                rest = word[:l] + word[l + 1:]
                x += sets[word[l]][sum(o * 4 ** p for p, o in enumerate(rest))]
        pts.append(x)
    return pts


def arcs_product(k: int, pad: int = 0, seed: int = 0, bend: Fraction = Fraction(1, 8),
                 spread: Fraction = Fraction(1, 4)) -> PointConfig:
    """4^k pairwise strictly antipodal points in R^(3k), plus ``pad`` pyramid apexes.

    The 3-space gadget is three point rows on arcs near skew cube edges plus
    the corner (1, 1, 1).  If the finite gadget fails its exact check, the arcs
    are flattened and shortened and the check repeated.  ``seed`` only
    scales the starting bend.
    """
    if k < 1:
        raise GeometryError("k must be >= 1")
    if pad not in (0, 1, 2):
        raise GeometryError("pad must be 0, 1 or 2")
    bend = Fraction(bend) / (1 + seed % 4)
    spread = Fraction(spread)
    m = 4 ** (k - 1)
    corner = [tuple(Fraction(c) for c in GADGET_CORNER)]
    for _ in range(MAX_HALVINGS):
        sets = arc_points(m, bend, spread) + [corner]
        if gadget_is_strict(sets):
            break
        bend /= 2
        spread /= 2
    else:
        raise ConstructionError("arc gadget never became weakly strictly antipodal")
    pts = product_points(k, sets)
    for _ in range(pad):
        apex = _centroid(pts) + (Fraction(1),)
        pts = [p + (Fraction(0),) for p in pts] + [apex]
    config = _finish(pts, "arcs_product", {"k": k, "pad": pad, "seed": seed, "bend": bend, "spread": spread})
    total = config.n * (config.n - 1) // 2
    report = count_pairs(config, STRICT)
    if report.count != total:
        raise ConstructionError(f"arcs_product({k}, {pad}): only {report.count} of {total} pairs strict")
    config.construction["sa"] = report.count
    return config


# ---------------------------------------------------------------------------
# Registry used by the command line


def _frac(v):
    return Fraction(v)


CONSTRUCTIONS = {
    "base_polytope": (base_polytope, {"kind": str, "d": int, "n": int}),
    "pyramid_over": (None, {"base": str, "times": int, "d": int, "n": int}),
    "simplex_barycenter": (simplex_barycenter, {"d": int, "k": int, "eps0": _frac, "seed": int}),
    "crosspoly_pyramid": (crosspoly_pyramid, {"d": int, "k": int}),
    "truncated_crosspolytope": (truncated_crosspolytope, {"d": int, "n": int, "seed": int}),
    "bipyramid_triangle": (bipyramid_triangle, {"variant": str, "eps": _frac, "seed": int}),
    "arcs_product": (arcs_product, {"k": int, "pad": int, "seed": int}),
    "random_polygon": (random_polygon, {"n": int, "seed": int}),
    "random_sphere_points": (random_sphere_points, {"d": int, "n": int, "seed": int}),
    "random_grid_convex": (random_grid_convex, {"d": int, "n": int, "seed": int, "grid": int}),
}


def build(name: str, params: dict) -> PointConfig:
    """Run a named generator with string parameters (as given on the command line)."""
    if name not in CONSTRUCTIONS:
        raise GeometryError(f"unknown construction {name!r}; known: {', '.join(sorted(CONSTRUCTIONS))}")
    fn, types = CONSTRUCTIONS[name]
    kwargs = {}
    for key, raw in params.items():
        if key not in types:
            raise GeometryError(f"{name} takes no parameter {key!r}; known: {', '.join(types)}")
        try:
            kwargs[key] = types[key](raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise GeometryError(f"bad value for {key}: {raw!r}") from exc
    if name == "pyramid_over":
        base_kw = {"kind": kwargs.pop("base", "parallelogram"), "d": kwargs.pop("d", 2)}
        if "n" in kwargs:
            base_kw["n"] = kwargs.pop("n")
        return pyramid_over(base_polytope(**base_kw), **kwargs)
    missing = [k for k in _required(fn) if k not in kwargs]
    if missing:
        raise GeometryError(f"{name} needs parameters: {', '.join(missing)}")
    return fn(**kwargs)


def _required(fn) -> list:
    return [p.name for p in inspect.signature(fn).parameters.values() if p.default is inspect.Parameter.empty]

"""Antipodal and strictly antipodal families of segments in R^3.

Two segments of a family are antipodal when two different parallel
supporting planes of the hull of all endpoints contain one segment each;
strictly so when each plane meets the hull only in its segment.  Every test
is a small LP in (u, hi, lo) over the endpoints; the hull itself is never
built.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .antipodality import ANTIPODAL, MODES, STRICT, Certificate
from .geom import EQ, GE, GeometryError, LinearSystem, Row, affine_dimension, as_point, dot, lp_witness


@dataclass(frozen=True)
class Segment3:
    p: tuple
    q: tuple

    def __post_init__(self):
        p, q = as_point(self.p), as_point(self.q)
        if len(p) != 3 or len(q) != 3:
            raise GeometryError("segment endpoints must have 3 coordinates")
        if p == q:
            raise GeometryError("segment endpoints must differ")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def endpoints(self) -> tuple:
        return (self.p, self.q)

    def sub(self, s: Fraction, t: Fraction) -> "Segment3":
        """The piece from parameter s to parameter t (0 is p, 1 is q)."""
        at = lambda r: tuple(a + r * (b - a) for a, b in zip(self.p, self.q))
        return Segment3(at(Fraction(s)), at(Fraction(t)))


@dataclass(frozen=True)
class SegmentFamily:
    segments: tuple
    label: str | None = None

    def __post_init__(self):
        segs = tuple(s if isinstance(s, Segment3) else Segment3(*s) for s in self.segments)
        object.__setattr__(self, "segments", segs)

    @property
    def n(self) -> int:
        return len(self.segments)

    def endpoints(self) -> list[tuple]:
        return [e for s in self.segments for e in s.endpoints]

    def spans(self) -> bool:
        return affine_dimension(self.endpoints()) == 3

    def map_affine(self, matrix, shift=None) -> "SegmentFamily":
        shift = shift or [0, 0, 0]
        f = lambda x: tuple(dot(row, x) + c for row, c in zip(matrix, shift))
        return SegmentFamily(tuple(Segment3(f(s.p), f(s.q)) for s in self.segments), self.label)

    def relabel(self, label: str) -> "SegmentFamily":
        return SegmentFamily(self.segments, label)

    def shrink(self, margin: Fraction) -> "SegmentFamily":
        """Cut ``margin`` (a fraction of the length) off both ends of every segment."""
        margin = Fraction(margin)
        if not 0 < margin < Fraction(1, 2):
            raise GeometryError("margin must lie strictly between 0 and 1/2")
        return SegmentFamily(tuple(s.sub(margin, 1 - margin) for s in self.segments), self.label)


def _segment_system(family: SegmentFamily, i: int, j: int, mode: str) -> LinearSystem:
    # variables: u (3 coordinates), hi, lo
    gap = 1 if mode == STRICT else 0
    rows = []
    for x in family.segments[i].endpoints:
        rows.append(Row(list(x) + [-1, 0], EQ, 0))
    for x in family.segments[j].endpoints:
        rows.append(Row(list(x) + [0, -1], EQ, 0))
    rows.append(Row([0, 0, 0, 1, -1], GE, 1))
    for k, s in enumerate(family.segments):
        if k in (i, j):
            continue
        for x in s.endpoints:
            rows.append(Row([-c for c in x] + [1, 0], GE, gap))
            rows.append(Row(list(x) + [0, -1], GE, gap))
    return LinearSystem(tuple(rows), 5)


def _validate(cert: Certificate, family: SegmentFamily, i: int, j: int, mode: str) -> bool:
    u = cert.direction
    if not cert.hi > cert.lo:
        return False
    if any(dot(u, x) != cert.hi for x in family.segments[i].endpoints):
        return False
    if any(dot(u, x) != cert.lo for x in family.segments[j].endpoints):
        return False
    for k, s in enumerate(family.segments):
        if k in (i, j):
            continue
        for x in s.endpoints:
            h = dot(u, x)
            ok = cert.lo < h < cert.hi if mode == STRICT else cert.lo <= h <= cert.hi
            if not ok:
                return False
    return True


def segment_pair_test(family: SegmentFamily, i: int, j: int, mode: str = STRICT) -> Certificate | None:
    """Slab certificate for segments i and j, or None."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if i == j:
        raise ValueError("a pair needs two different indices")
    if not family.spans():
        raise GeometryError("segment endpoints do not span R^3")
    w = lp_witness(_segment_system(family, i, j, mode))
    if w is None:
        return None
    u = w.values[:3]
    cert = Certificate(u, dot(u, family.segments[i].p), dot(u, family.segments[j].p))
    if not _validate(cert, family, i, j, mode):
        raise RuntimeError(f"segment certificate for ({i}, {j}) failed validation")
    return cert


def family_test(family: SegmentFamily, mode: str = STRICT) -> tuple[bool, tuple | None]:
    """(True, None) if every pair passes, else (False, first failing pair)."""
    for i, j in itertools.combinations(range(family.n), 2):
        if segment_pair_test(family, i, j, mode) is None:
            return False, (i, j)
    return True, None


# ---------------------------------------------------------------------------
# Named families

SKEW_CUBE_EDGES = (
    ((-1, 1, -1), (1, 1, -1)),
    ((-1, -1, 1), (-1, 1, 1)),
    ((1, -1, -1), (1, -1, 1)),
)
SEGMENT_KINDS = {
    "parallel_four": ANTIPODAL,
    "opposite_faces_four": ANTIPODAL,
    "prism_three": STRICT,
    "skew_interior_three": STRICT,
}


def segment_construction(kind: str) -> SegmentFamily:
    """Families that reach the maximal sizes: 4 antipodal, 3 strictly antipodal."""
    if kind == "parallel_four":
        segs = [((x, y, 0), (x, y, 1)) for x in (0, 1) for y in (0, 1)]
    elif kind == "opposite_faces_four":
        segs = [((0, y, 0), (1, y, 0)) for y in (0, 1)] + [((x, 0, 1), (x, 1, 1)) for x in (0, 1)]
    elif kind == "prism_three":
        segs = [((x, y, 0), (x, y, 1)) for x, y in ((0, 0), (1, 0), (0, 1))]
    elif kind == "skew_interior_three":
        return skew_edges().shrink(Fraction(1, 3)).relabel(kind)
    else:
        raise GeometryError(f"unknown segment family {kind!r}; known: {', '.join(SEGMENT_KINDS)}")
    return SegmentFamily(tuple(Segment3(*s) for s in segs), kind)


def skew_edges() -> SegmentFamily:
    """Three mutually skew edges of [-1, 1]^3, endpoints included."""
    return SegmentFamily(tuple(Segment3(*e) for e in SKEW_CUBE_EDGES), "skew_edges")


def parallel_over_polygon(base: Sequence[Sequence]) -> SegmentFamily:
    """Vertical unit segments over the vertices of a planar polygon."""
    segs = [Segment3((x, y, 0), (x, y, 1)) for x, y in base]
    return SegmentFamily(tuple(segs), f"parallel_{len(segs)}")


# ---------------------------------------------------------------------------
# Randomized probe for four strictly antipodal segments


def _random_point(rng: random.Random, den: int) -> tuple:
    return tuple(Fraction(rng.randint(-2 * den, 2 * den), den) for _ in range(3))


def _random_segment(rng: random.Random, den: int) -> Segment3:
    while True:
        p, q = _random_point(rng, den), _random_point(rng, den)
        if p != q:
            return Segment3(p, q)


def _perturb(seg: Segment3, rng: random.Random, den: int) -> Segment3:
    jig = lambda x: tuple(c + Fraction(rng.randint(-2, 2), 8 * den) for c in x)
    while True:
        try:
            return Segment3(jig(seg.p), jig(seg.q))
        except GeometryError:
            continue


def random_family(rng: random.Random, size: int = 4, den: int = 8) -> SegmentFamily:
    """A random family: either fully random, or a named family perturbed,
    shrunk and completed with random segments."""
    style = rng.randrange(3)
    if style == 0:
        segs = [_random_segment(rng, den) for _ in range(size)]
    else:
        kind = rng.choice(sorted(SEGMENT_KINDS))
        base = segment_construction(kind)
        if style == 2:
            base = base.shrink(Fraction(rng.randint(1, 7), 16))
        segs = [_perturb(s, rng, den) for s in base.segments][:size]
        while len(segs) < size:
            segs.append(_random_segment(rng, den))
    return SegmentFamily(tuple(segs), "random")


def strict_four_probe(trials: int = 10_000, seed: int = 0, size: int = 4) -> SegmentFamily | None:
    """Look for ``size`` pairwise strictly antipodal segments; None if none turn up."""
    rng = random.Random(seed)
    for _ in range(trials):
        fam = random_family(rng, size)
        if not fam.spans():
            continue
        if family_test(fam, STRICT)[0]:
            return fam
    return None

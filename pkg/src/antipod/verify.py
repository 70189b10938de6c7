"""Acceptance suite: each entry recomputes one family of facts exactly.

An entry is a list of checks (name, expected, actual, pass).  Entries are
deterministic, with every seed fixed here, so two runs give the same report.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Callable

from . import __version__
from .antipodality import ANTIPODAL, STRICT, count_pairs, difference_body_counts, parallel_side_pairs
from .bounds import (
    bound_ratio,
    bound_table,
    branch_inequality,
    crosspoly_side,
    known_value,
    lower_bound_recursive,
    simplex_side,
    upper_bound,
)
from .constructions import (
    arcs_product,
    base_polytope,
    bipyramid_triangle,
    crosspoly_pyramid,
    pyramid_over,
    random_grid_convex,
    random_polygon,
    random_sphere_points,
    regular_ngon,
    simplex_barycenter,
    truncated_crosspolytope,
    verified_counts,
)
from .geom import hull_vertices
from .search import CONVEX_POSITION, SearchTask, danzer_grunbaum_probe, search_extremal
from .segments import SEGMENT_KINDS, family_test, parallel_over_polygon, segment_construction, strict_four_probe

SEARCH_SEED = 0
SEARCH_CASES = [(2, n) for n in range(4, 9)] + [(3, n) for n in range(4, 10)] + [(4, 5), (4, 6), (4, 7)]


@dataclass
class Check:
    name: str
    expected: object
    actual: object
    passed: bool

    def as_dict(self) -> dict:
        return {"name": self.name, "expected": self.expected, "actual": self.actual, "pass": self.passed}


def check_eq(name: str, expected, actual) -> Check:
    return Check(name, expected, actual, expected == actual)


@dataclass
class SuiteEntry:
    id: str
    description: str
    citation: str
    seeds: list
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "description": self.description,
            "citation": self.citation,
            "seeds": self.seeds,
            "expected": "all checks hold",
            "actual": f"{sum(c.passed for c in self.checks)}/{len(self.checks)} checks hold",
            "pass": self.passed,
            "checks": [c.as_dict() for c in self.checks],
        }


@dataclass(frozen=True)
class Criterion:
    id: str
    description: str
    citation: str
    seeds: tuple
    run: Callable[[], list]


SUITE: dict[str, Criterion] = {}


def criterion(id: str, description: str, citation: str, seeds=()):
    def register(fn):
        SUITE[id] = Criterion(id, description, citation, tuple(seeds), fn)
        return fn
    return register


# ---------------------------------------------------------------------------
# Shared, cached constructions


@lru_cache(maxsize=None)
def truncated_family() -> tuple:
    return tuple(truncated_crosspolytope(d, n) for d in (3, 4, 5) for n in range(2 * d + 1, 4 * d + 1))


# ---------------------------------------------------------------------------
# Criteria


@criterion("oracle_equivalence",
           "pair LP and difference-body counts agree on (a, sa) for 200 random strictly convex sets",
           "sa is half the vertex count of P - P; antipodal pairs are differences on its boundary",
           seeds=list(range(200)))
def oracle_equivalence() -> list:
    checks = []
    for s in range(200):
        rng = random.Random(s)
        d = 2 + s % 3
        n = rng.randint(d + 1, 10)
        config = random_sphere_points(d, n, s) if s % 2 == 0 else random_grid_convex(d, n, s)
        lp = (count_pairs(config, ANTIPODAL).count, count_pairs(config, STRICT).count)
        db = difference_body_counts(config)
        checks.append(check_eq(f"seed {s} (d={d}, n={n})", list(lp), [db.a, db.sa]))
    return checks


@criterion("planar_law",
           "50 random convex polygons satisfy a = n + k and sa = n - k, k = parallel side pairs",
           "planar count: a(X) = n + k, sa(X) = n - k",
           seeds=list(range(50)))
def planar_law() -> list:
    checks = []
    for s in range(50):
        n = 3 + s % 10
        config = random_polygon(n, s)
        k = parallel_side_pairs(config)
        a = count_pairs(config, ANTIPODAL).count
        sa = count_pairs(config, STRICT).count
        checks.append(check_eq(f"seed {s} (n={n}, k={k})", [n + k, n - k], [a, sa]))
    return checks


@criterion("known_minima",
           "constructions reach the known minima of sa",
           "simplex d(d+1)/2; cross-polytope d; pyramid over parallelogram 6; truncated cross-polytope 2d; "
           "pyramid over a (d-1)-cross-polytope 3(d-1); two-fold pyramid over a parallelogram 11",
           seeds=[0])
def known_minima() -> list:
    checks = []
    for d in range(2, 7):
        checks.append(check_eq(f"simplex d={d}", d * (d + 1) // 2, verified_counts(base_polytope("simplex", d)).sa))
    for d in range(2, 6):
        checks.append(check_eq(f"cross-polytope d={d}", d, verified_counts(base_polytope("cross_polytope", d)).sa))
    checks.append(check_eq("pyramid over parallelogram", 6, pyramid_over(base_polytope("parallelogram")).construction["sa"]))
    for config in truncated_family():
        d, n = config.dim, config.n
        checks.append(check_eq(f"truncated cross-polytope d={d}, n={n}", 2 * d, config.construction["sa"]))
    for d in range(2, 7):
        checks.append(check_eq(f"crosspoly_pyramid({d}, {d - 1})", 3 * (d - 1), crosspoly_pyramid(d, d - 1).construction["sa"]))
    checks.append(check_eq("two-fold pyramid over parallelogram", 11,
                           pyramid_over(base_polytope("parallelogram"), 2).construction["sa"]))
    checks.append(check_eq("simplex_barycenter(4, 2)", 11, simplex_barycenter(4, 2).construction["sa"]))
    return checks


@criterion("five_point_table",
           "pyramids over quadrangles and bipyramids over a triangle in R^3",
           "pyramid over parallelogram 6, trapezoid 7, other quadrangle 8; bipyramids 7 <= sa <= 10, both attained",
           seeds=list(range(30)))
def five_point_table() -> list:
    checks = []
    for kind, want in (("parallelogram", 6), ("trapezoid", 7), ("generic_quadrangle", 8)):
        checks.append(check_eq(f"pyramid over {kind}", want, pyramid_over(base_polytope(kind)).construction["sa"]))
    checks.append(check_eq("bipyramid, flat apex", 7, bipyramid_triangle("seven").construction["sa"]))
    checks.append(check_eq("bipyramid, searched", 10, bipyramid_triangle("search_max").construction["sa"]))
    for s in range(30):
        sa = bipyramid_triangle("random", seed=s).construction["sa"]
        checks.append(Check(f"random bipyramid seed {s}", "7..10", sa, 7 <= sa <= 10))
    return checks


@criterion("truncation_internals",
           "every truncated cross-polytope has n vertices and |vert((P - P)/2)| = 4d",
           "the difference body keeps 4d vertices; |vert P| = 2d + 1 + d - k",
           seeds=[0])
def truncation_internals() -> list:
    checks = []
    for config in truncated_family():
        d, n = config.dim, config.n
        requested = config.construction["params"]["n"]
        nv = len(hull_vertices(config.points))
        db = difference_body_counts(config).db_vertices
        checks.append(check_eq(f"d={d}, n={requested}", [requested, 4 * d], [nv, db]))
    return checks


@criterion("arcs_product",
           "products of the arc gadget are pairwise strictly antipodal",
           "strictly antipodal sets of size 4^(d/3) from products of a 3-space gadget",
           seeds=[0])
def arcs_product_entry() -> list:
    checks = []
    for k, pad in ((1, 0), (2, 0), (2, 1)):
        config = arcs_product(k, pad)
        n = 4**k + pad
        checks.append(check_eq(f"k={k}, pad={pad} (R^{3 * k + pad})", [n, comb(n, 2)],
                               [config.n, config.construction["sa"]]))
    return checks


@criterion("segment_families",
           "segment families: named extremal families pass, five parallel segments fail, "
           "no four strictly antipodal segments in 10^4 random trials",
           "antipodal segment families in R^3 have at most 4 members, strictly antipodal ones at most 3",
           seeds=[0])
def segment_families() -> list:
    checks = []
    for kind, mode in SEGMENT_KINDS.items():
        fam = segment_construction(kind)
        checks.append(check_eq(f"{kind} is {mode}", True, family_test(fam, mode)[0]))
    five = parallel_over_polygon(regular_ngon(5))
    checks.append(check_eq("five parallel segments antipodal", False, family_test(five, ANTIPODAL)[0]))
    found = strict_four_probe(10_000, seed=0)
    checks.append(check_eq("strictly antipodal 4-family found", None, found))
    return checks


@criterion("bounds_consistency",
           "bound calculators are mutually consistent for d <= 12",
           "recursive lower bound <= construction upper bound; exact values inside; "
           "closed-formula step inequality; upper/lower ratio at most 2",
           seeds=[])
def bounds_consistency() -> list:
    checks = []
    bad = []
    for d in range(2, 13):
        for k in range(1, d):
            lo, up = lower_bound_recursive(d, k), upper_bound(d, k)
            exact = known_value(d, d + k)
            if lo > up or (exact is not None and not lo <= exact <= up):
                bad.append([d, k, lo, up, exact])
    checks.append(check_eq("lower <= known <= upper, 2 <= d <= 12", [], bad))
    table = bound_table(12)
    checks.append(check_eq("bound table rows", 66, len(table)))
    bad = [[d, k] for d in range(4, 13) for k in range(2, d - 1)
           if not (lambda s: s[0] >= s[1])(branch_inequality(d, k))]
    checks.append(check_eq("step inequality, 4 <= d <= 12, 2 <= k <= d-2", [], bad))
    worst = max(bound_ratio(d, k) for d in range(3, 201) for k in range(2, d))
    checks.append(Check("max upper/lower ratio, d <= 200", "<= 2", str(worst), worst <= 2))
    bad = [[d, k] for d in range(2, 201) for k in range(1, d + 1)
           if 3 * k == 2 * d - 2 and simplex_side(d, k) != crosspoly_side(d, k)]
    checks.append(check_eq("constructions agree when 3k = 2d - 2", [], bad))
    return checks


@criterion("convex_position_antipodal_minimum",
           "minimum of a over n points in convex position is n + d(d-1)/2 - 1",
           "a simplex with extra points near facet barycentres attains n + d(d-1)/2 - 1; nothing smaller exists",
           seeds=[SEARCH_SEED])
def convex_position_minimum() -> list:
    checks = []
    for d in range(2, 5):
        for n in range(d + 1, d + 5):
            config = simplex_barycenter(d, n - d)
            checks.append(check_eq(f"construction d={d}, n={n}", n + d * (d - 1) // 2 - 1, config.construction["a"]))
    for d in (2, 3):
        for n in range(d + 1, 8):
            bound = n + d * (d - 1) // 2 - 1
            # the default run stops at the bound; a second run without early stop
            # spends its whole budget looking below it
            reached = search_extremal(SearchTask(d, n, ANTIPODAL, seed=SEARCH_SEED, position=CONVEX_POSITION))
            full = search_extremal(SearchTask(d, n, ANTIPODAL, seed=SEARCH_SEED, restarts=1,
                                              position=CONVEX_POSITION, stop_at=-1))
            got = min(reached.best_value, full.best_value)
            checks.append(Check(f"search d={d}, n={n}", f">= {bound}", got, got >= bound))
    return checks


@criterion("search_minima",
           "minimising search reaches the known minimum of sa",
           "known minima: planar ceil(n/2) (3 for n = 3); R^3 table; R^4: 10, 11, 9",
           seeds=[SEARCH_SEED])
def search_minima() -> list:
    checks = []
    for d, n in SEARCH_CASES:
        res = search_extremal(SearchTask(d, n, STRICT, seed=SEARCH_SEED))
        checks.append(check_eq(f"d={d}, n={n}", known_value(d, n), res.best_value))
    return checks


@criterion("antipodal_set_probe",
           "maximising search finds no antipodal set of 2^d + 1 points, d = 2, 3",
           "an antipodal set in R^d has at most 2^d points",
           seeds=[SEARCH_SEED])
def antipodal_set_probe() -> list:
    checks = []
    for d in (2, 3):
        n = 2**d + 1
        res = danzer_grunbaum_probe(d, seed=SEARCH_SEED)
        checks.append(Check(f"d={d}, n={n}", f"< {comb(n, 2)}", res.best_value, res.best_value < comb(n, 2)))
    return checks


# ---------------------------------------------------------------------------


def run_entry(name: str) -> SuiteEntry:
    if name not in SUITE:
        raise KeyError(f"unknown suite entry {name!r}; known: {', '.join(SUITE)}")
    c = SUITE[name]
    return SuiteEntry(c.id, c.description, c.citation, list(c.seeds), c.run())


def run_suite(names=None) -> dict:
    names = list(SUITE) if names in (None, "all", ["all"]) else list(names)
    entries = [run_entry(name) for name in names]
    return {
        "tool": "antipod",
        "version": __version__,
        "entries": [e.as_dict() for e in entries],
        "summary": {"total": len(entries), "passed": sum(e.passed for e in entries),
                    "failed": sum(not e.passed for e in entries)},
    }

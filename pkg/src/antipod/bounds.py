"""Bounds on the least number of strictly antipodal pairs.

Write m(d, n) for the minimum of sa(X) over n points in strictly convex
position spanning R^d, and n = d + k.  This module evaluates the closed upper
and lower formulas, the recursive lower estimate, and the table of values
known exactly, each with a record of which rule produced it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import ceil, comb

INF = float("inf")

# Exact minima for d <= 4, keyed by (d, k).  They seed the recursion.
SEEDS = {
    (2, 1): 3,   # triangle
    (3, 1): 6,   # tetrahedron
    (3, 2): 6,   # five points in R^3
    (4, 1): 10,  # 4-simplex
    (4, 2): 11,  # two-fold pyramid over a parallelogram
    (4, 3): 9,   # pyramid over an octahedron
}

# Published values in d = 5 beyond what the recursion reaches: (lower, upper).
PUBLISHED_D5 = {
    (5, 2): (16, 16),
    (5, 3): (15, 17),
}

# Maximum-side quantities, recorded for reports only.
MAX_SIDE_NOTES = {
    "antipodal_pairs_R3_upper": "2n^2/5 + O(n^c) for some c > 2",
    "antipodal_set_size_upper": "2^d, with equality only for parallelepipeds",
    "strictly_antipodal_set_size_R3": "5",
}


def _check_dk(d: int, k: int, kmax: int):
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    if not 1 <= k <= kmax:
        raise ValueError(f"need 1 <= k <= {kmax} for d = {d}, got k = {k}")


def simplex_side(d: int, k: int) -> int:
    """sa of a simplex with k - 1 points near facet barycentres."""
    return d * (d + 1) // 2 + k - 1


def crosspoly_side(d: int, k: int) -> int:
    """sa of a (d - k)-fold pyramid over a k-cross-polytope."""
    return k + (d - k) * (d + 3 * k - 1) // 2


def upper_bound(d: int, k: int) -> int:
    """Smaller of the two construction counts; valid for 1 <= k <= d."""
    _check_dk(d, k, d)
    return min(simplex_side(d, k), crosspoly_side(d, k))


def lower_bound_closed(d: int, k: int) -> int:
    """(d + k)(d - k + 1) / 2."""
    _check_dk(d, k, d - 1)
    return (d + k) * (d - k + 1) // 2


def _ceil_frac(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


@lru_cache(maxsize=None)
def _recursive(d: int, k: int) -> tuple[int, str]:
    if (d, k) in SEEDS:
        return SEEDS[(d, k)], "seed"
    if k == d - 1:
        return 3 * (d - 1), "pyramid over cross-polytope"
    prev = [_recursive(d - 1, kk)[0] for kk in range(1, k + 1)]
    branch1 = min(prev) + (d + k - 1)
    branch2 = _ceil_frac(min(prev[:-1]) * Fraction(d + k, d + k - 2)) if k >= 2 else INF
    rec = min(branch1, branch2)
    candidates = [
        (rec, "high degree branch" if rec == branch1 else "projection branch"),
        (lower_bound_closed(d, k), "closed formula"),
        (3 * (d - 1), "3(d-1)"),
    ]
    value = max(v for v, _ in candidates)
    return value, next(name for v, name in candidates if v == value)


def lower_bound_recursive(d: int, k: int) -> int:
    """Dynamic-programming lower estimate for m(d, d + k), 1 <= k <= d - 1.

    Seeds are the exact minima for d <= 4; k = d - 1 gives 3(d - 1).  Otherwise
    the estimate is the larger of 3(d - 1), the closed formula, and the
    smaller of two branches built from row d - 1:

        min_{k' <= k} L(d-1, k') + (d + k - 1)
        ceil(min_{k' <= k-1} L(d-1, k') * (d + k) / (d + k - 2))
    """
    _check_dk(d, k, d - 1)
    return _recursive(d, k)[0]


def recursion_rule(d: int, k: int) -> str:
    _check_dk(d, k, d - 1)
    return _recursive(d, k)[1]


def known_value(d: int, n: int) -> int | None:
    """Exact m(d, n) where it is determined, else None."""
    if d < 2 or n < d + 1:
        raise ValueError(f"need d >= 2 and n >= d + 1, got d = {d}, n = {n}")
    return _known(d, n)[0]


def _known(d: int, n: int) -> tuple[int | None, str]:
    half = (n + 1) // 2
    if n == d + 1:
        return d * (d + 1) // 2, "simplex"
    if d == 2:
        return half, "planar"
    if d == 3:
        return (6, "d = 3 table") if n in (5, 7, 9) else (half, "d = 3 table")
    if n == 2 * d - 1:
        return 3 * (d - 1), "pyramid over cross-polytope"
    if n >= 2 * d and n % 2 == 0:
        return n // 2, "even n >= 2d"
    if n % 2 == 1 and 2 * d + 1 <= n <= 4 * d - 1:
        return 2 * d, "truncated cross-polytope"
    if n % 2 == 1 and n >= 4 * d - 1:
        return half, "odd n >= 4d - 1"
    if (d, n) == (4, 6):
        return 11, "d = 4 table"
    pub = PUBLISHED_D5.get((d, n - d))
    if pub and pub[0] == pub[1]:
        return pub[0], "published d = 5"
    return None, "open"


@dataclass(frozen=True)
class BoundResult:
    d: int
    k: int
    lower: int
    upper: int
    exact: int | None = None
    provenance: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"lower {self.lower} exceeds upper {self.upper} at d = {self.d}, k = {self.k}")
        if self.exact is not None and not self.lower <= self.exact <= self.upper:
            raise ValueError(f"exact value {self.exact} outside [{self.lower}, {self.upper}]")

    def as_dict(self) -> dict:
        return {"d": self.d, "k": self.k, "n": self.d + self.k, "lower": self.lower,
                "upper": self.upper, "exact": self.exact, "provenance": list(self.provenance)}


def bound_result(d: int, k: int) -> BoundResult:
    """Everything known about m(d, d + k), 1 <= k <= d - 1."""
    _check_dk(d, k, d - 1)
    lower = lower_bound_recursive(d, k)
    upper = upper_bound(d, k)
    prov = [f"lower: {recursion_rule(d, k)}",
            "upper: " + ("simplex with barycentre points" if simplex_side(d, k) <= crosspoly_side(d, k)
                         else "pyramid over cross-polytope")]
    pub = PUBLISHED_D5.get((d, k))
    if pub:
        if pub[0] > lower:
            lower = pub[0]
            prov.append("lower: published d = 5 value")
        if pub[1] < upper:
            upper = pub[1]
            prov.append("upper: published d = 5 value")
    exact, rule = _known(d, d + k)
    if exact is not None:
        prov.append(f"exact: {rule}")
        lower = max(lower, exact) if exact <= upper else lower
    return BoundResult(d, k, lower, upper, exact, tuple(prov))


def bound_table(dmax: int) -> list[BoundResult]:
    return [bound_result(d, k) for d in range(2, dmax + 1) for k in range(1, d)]


def proven_lower_bound(d: int, n: int) -> int:
    """Best proven lower bound on m(d, n), used to stop searches early."""
    exact = known_value(d, n)
    if exact is not None:
        return exact
    k = n - d
    floor = max((n + 1) // 2, d)
    if k <= d - 1:
        return max(floor, bound_result(d, k).lower)
    return floor


def max_pairs(n: int) -> int:
    return comb(n, 2)


def branch_inequality(d: int, k: int) -> tuple[Fraction, Fraction]:
    """Both sides of f(d-1, k) + (d+k-1) >= f(d-1, k-1) (d+k)/(d+k-2), 4 <= d, 2 <= k <= d-2."""
    if d < 4 or not 2 <= k <= d - 2:
        raise ValueError(f"defined for d >= 4, 2 <= k <= d - 2; got d = {d}, k = {k}")
    lhs = Fraction(lower_bound_closed(d - 1, k) + d + k - 1)
    rhs = lower_bound_closed(d - 1, k - 1) * Fraction(d + k, d + k - 2)
    return lhs, rhs


def bound_ratio(d: int, k: int) -> Fraction:
    """upper_bound / lower_bound_closed, at most 2 throughout."""
    return Fraction(upper_bound(d, k), lower_bound_closed(d, k))

"""Exact rational linear algebra and LP feasibility.

Everything here works over :class:`fractions.Fraction`.  The simplex core keeps
each tableau row as a list of Python integers scaled by an (implicit) positive
factor, which is exact and a good deal faster than pivoting on Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction
Point = tuple  # tuple[Fraction, ...]

GE = ">="
EQ = "="


class GeometryError(ValueError):
    """Malformed or degenerate geometric input."""


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: a float coordinate silently carries binary rounding
    into every downstream count.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} {value!r} as an exact rational")


def as_point(coords: Iterable) -> Point:
    return tuple(as_rational(c) for c in coords)


def _check_points(points: Sequence[Sequence]) -> int:
    if len(points) == 0:
        raise GeometryError("empty point list")
    dim = len(points[0])
    for p in points:
        if len(p) != dim:
            raise GeometryError(f"mixed dimensions: {len(p)} vs {dim}")
    return dim


def row_echelon(vectors: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form of ``vectors`` (as rows) and its pivot columns."""
    rows = [list(v) for v in vectors]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(vectors: Sequence[Sequence[Fraction]]) -> int:
    return len(row_echelon(vectors)[1])


def nullspace(vectors: Sequence[Sequence[Fraction]], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of {y : <v, y> = 0 for every row v}."""
    if ncols is None:
        ncols = len(vectors[0])
    rref, pivots = row_echelon(vectors) if vectors else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        y = [Fraction(0)] * ncols
        y[f] = Fraction(1)
        for row, pc in zip(rref, pivots):
            y[pc] = -row[f]
        basis.append(y)
    return basis


def affine_dimension(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull of ``points``, computed exactly."""
    _check_points(points)
    base = points[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    return rank(diffs) if diffs else 0


def affine_coordinate_indices(points: Sequence[Sequence]) -> list[int]:
    """Coordinate indices whose projection is injective on aff(points).

    Projecting onto these coordinates is an affine isomorphism from the affine
    hull onto R^m, m = affine_dimension(points).
    """
    base = points[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    if not diffs:
        return []
    return row_echelon(diffs)[1]


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


# ---------------------------------------------------------------------------
# Simplex core


def _int_row(coeffs: Sequence[Fraction], rhs: Fraction) -> tuple[list[int], int]:
    den = lcm(*(c.denominator for c in coeffs), rhs.denominator)
    return [int(c * den) for c in coeffs], int(rhs * den)


def solve_nonneg(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> list[Fraction] | None:
    """Find ``x >= 0`` with ``A x = b`` by phase-one simplex (Bland's rule).

    Returns an exact basic feasible solution, or None when the system is
    infeasible.  Artificial columns are implicit and dropped once they leave
    the basis; they never re-enter.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    rows: list[list[int]] = []
    rhs: list[int] = []
    piv: list[int] = []    # coefficient of the basic variable in its row
    basis: list[int] = []  # -1 - i marks the artificial of row i
    for i in range(m):
        r, v = _int_row(A[i], b[i])
        if v < 0:
            r = [-x for x in r]
            v = -v
        g = gcd(*r, v)
        if g == 0:
            continue  # 0 = 0
        if g > 1:
            r = [x // g for x in r]
            v //= g
        rows.append(r)
        rhs.append(v)
        piv.append(1)
        basis.append(-1 - i)

    while True:
        art = [i for i, bv in enumerate(basis) if bv < 0]
        if not art:
            break
        scale = lcm(*(piv[i] for i in art))
        weights = [(i, scale // piv[i]) for i in art]
        enter = -1
        for j in range(n):
            if sum(w * rows[i][j] for i, w in weights) > 0:
                enter = j
                break
        if enter < 0:
            break
        # ratio test; ties broken by smallest basic index, artificials first
        leave = -1
        for i in range(len(rows)):
            a = rows[i][enter]
            if a <= 0:
                continue
            if leave < 0:
                leave = i
                continue
            lhs = rhs[i] * rows[leave][enter]
            cur = rhs[leave] * a
            if lhs < cur or (lhs == cur and basis[i] < basis[leave]):
                leave = i
        if leave < 0:
            # unbounded direction decreasing the infeasibility: cannot happen
            # in phase one (objective bounded below by 0)
            raise RuntimeError("phase-one simplex reported unbounded")
        _pivot(rows, rhs, piv, leave, enter)
        basis[leave] = enter

    for i, bv in enumerate(basis):
        if bv < 0 and rhs[i] != 0:
            return None
    x = [Fraction(0)] * n
    for i, bv in enumerate(basis):
        if bv >= 0:
            x[bv] = Fraction(rhs[i], piv[i])
    return x


def _pivot(rows, rhs, piv, r, j):
    p = rows[r][j]
    prow = rows[r]
    pr = rhs[r]
    for i in range(len(rows)):
        if i == r:
            continue
        a = rows[i][j]
        if a == 0:
            continue
        row = rows[i]
        new = [p * x - a * y for x, y in zip(row, prow)]
        nr = p * rhs[i] - a * pr
        npiv = p * piv[i]
        g = gcd(*new, nr, npiv)
        if g > 1:
            new = [x // g for x in new]
            nr //= g
            npiv //= g
        rows[i] = new
        rhs[i] = nr
        piv[i] = npiv
    piv[r] = p


# ---------------------------------------------------------------------------
# Linear systems over free variables


@dataclass(frozen=True)
class Row:
    coeffs: tuple
    rel: str
    rhs: Fraction

    def __post_init__(self):
        if self.rel not in (GE, EQ):
            raise GeometryError(f"relation must be '>=' or '=', got {self.rel!r}")
        object.__setattr__(self, "coeffs", tuple(as_rational(c) for c in self.coeffs))
        object.__setattr__(self, "rhs", as_rational(self.rhs))

    def satisfied_by(self, values: Sequence[Fraction]) -> bool:
        lhs = dot(self.coeffs, values)
        return lhs >= self.rhs if self.rel == GE else lhs == self.rhs


@dataclass(frozen=True)
class LinearSystem:
    """Rows ``<coeffs, x> (>= | =) rhs`` over free variables x."""

    rows: tuple
    num_vars: int

    def __post_init__(self):
        rows = tuple(r if isinstance(r, Row) else Row(*r) for r in self.rows)
        for r in rows:
            if len(r.coeffs) != self.num_vars:
                raise GeometryError(
                    f"row has {len(r.coeffs)} coefficients, system has {self.num_vars} variables")
        object.__setattr__(self, "rows", rows)

    def check(self, values: Sequence[Fraction]) -> bool:
        return len(values) == self.num_vars and all(r.satisfied_by(values) for r in self.rows)


@dataclass(frozen=True)
class Witness:
    values: tuple


def lp_witness(system: LinearSystem) -> Witness | None:
    """Exact feasible point of ``system`` or None if it is infeasible.

    Every returned witness is substituted back into all rows before it is
    handed out.
    """
    nv = system.num_vars
    ge_rows = [r for r in system.rows if r.rel == GE]
    A, b = [], []
    ns = len(ge_rows)
    k = 0
    for r in system.rows:
        row = list(r.coeffs) + [-c for c in r.coeffs] + [Fraction(0)] * ns
        if r.rel == GE:
            row[2 * nv + k] = Fraction(-1)
            k += 1
        A.append(row)
        b.append(r.rhs)
    if not A:
        return Witness(tuple(Fraction(0) for _ in range(nv)))
    x = solve_nonneg(A, b)
    if x is None:
        return None
    values = tuple(x[i] - x[nv + i] for i in range(nv))
    if not system.check(values):
        raise RuntimeError("LP witness failed exact substitution")
    return Witness(values)


# ---------------------------------------------------------------------------
# Hull membership


def in_hull(z: Sequence[Fraction], points: Sequence[Sequence[Fraction]]) -> bool:
    """Whether z lies in conv(points)."""
    if not points:
        return False
    d = len(z)
    A = [[p[c] for p in points] for c in range(d)]
    A.append([Fraction(1)] * len(points))
    lam = solve_nonneg(A, list(z) + [Fraction(1)])
    if lam is None:
        return False
    assert all(sum(l * p[c] for l, p in zip(lam, points)) == z[c] for c in range(d))
    return True


def in_relative_interior(z: Sequence[Fraction], points: Sequence[Sequence[Fraction]]) -> bool:
    """Whether z lies in relint conv(points).

    z is a relative interior point exactly when it is a convex combination
    giving every point a positive weight; after rescaling the weights that
    reads ``sum mu_p (p - z) = 0`` with all ``mu_p >= 1``.
    """
    if not points:
        return False
    d = len(z)
    diffs = [[p[c] - z[c] for c in range(d)] for p in points]
    A = [[v[c] for v in diffs] for c in range(d)]
    b = [-sum(v[c] for v in diffs) for c in range(d)]
    nu = solve_nonneg(A, b)
    if nu is None:
        return False
    assert all(sum((1 + t) * v[c] for t, v in zip(nu, diffs)) == 0 for c in range(d))
    return True


def hull_vertices(points: Sequence[Sequence]) -> list[int]:
    """Indices i with points[i] not in conv of the remaining points.

    A repeated point counts once, under its lowest index.
    """
    _check_points(points)
    first: dict = {}
    for i, p in enumerate(points):
        first.setdefault(tuple(p), i)
    uniq = list(first.items())
    out = []
    for k, (p, i) in enumerate(uniq):
        others = [q for kk, (q, _) in enumerate(uniq) if kk != k]
        if not in_hull(p, others):
            out.append(i)
    return sorted(out)

"""Annealing search for configurations with few (or many) antipodal pairs.

Moves act on an integer grid and are scored by a floating-point estimate
from qhull.  Floats only steer the walk: whenever the estimate improves,
the configuration is snapped to rationals and recounted exactly, and only
exact counts are ever reported.
"""

from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from .antipodality import ANTIPODAL, MODES, STRICT, PairReport, PointConfig, PositionClass, count_pairs, position_class
from .bounds import known_value, max_pairs, proven_lower_bound
from .geom import GeometryError

MINIMIZE = "minimize"
MAXIMIZE = "maximize"
OBJECTIVES = (MINIMIZE, MAXIMIZE)
STRICT_POSITION = "strict"
CONVEX_POSITION = "convex"

# annealing constants
T_START = 2.0
T_END = 0.05
TOL = 1e-9


class SearchError(RuntimeError):
    """No verifiable configuration was found."""


@dataclass(frozen=True)
class SearchTask:
    d: int
    n: int
    mode: str = STRICT
    objective: str = MINIMIZE
    budget: int = 100_000
    seed: int = 0
    restarts: int = 8
    position: str = STRICT_POSITION
    grid: int | None = None
    denominator_bound: int = 10**6
    stop_at: int | None = None

    def __post_init__(self):
        if self.d < 1 or self.n < self.d + 1:
            raise ValueError(f"need n >= d + 1 >= 2, got d = {self.d}, n = {self.n}")
        if self.budget < 1 or self.restarts < 1:
            raise ValueError("budget and restarts must be positive")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.objective not in OBJECTIVES:
            raise ValueError(f"objective must be one of {OBJECTIVES}")
        if self.position not in (STRICT_POSITION, CONVEX_POSITION):
            raise ValueError("position must be 'strict' or 'convex'")

    def grid_size(self) -> int:
        return self.grid or max(2, math.ceil(self.n ** (1 / self.d)) + 1)

    def target(self) -> int | None:
        """Value at which the search may stop: nothing better can exist."""
        if self.stop_at is not None:
            return self.stop_at
        if self.objective == MAXIMIZE:
            return max_pairs(self.n)
        if self.mode == STRICT and self.position == STRICT_POSITION and self.d >= 2:
            return proven_lower_bound(self.d, self.n)
        if self.mode == ANTIPODAL:
            return self.n + self.d * (self.d - 1) // 2 - 1
        return None


@dataclass
class SearchResult:
    best_config: PointConfig
    best_value: int
    history: list
    report: PairReport
    steps: int
    reached_target: bool
    verified: bool = True

    def as_dict(self) -> dict:
        return {"best_value": self.best_value, "history": self.history, "steps": self.steps,
                "reached_target": self.reached_target, "verified": self.verified}


# ---------------------------------------------------------------------------
# Float estimator


def _hull(points: np.ndarray):
    try:
        return ConvexHull(points)
    except (QhullError, ValueError):
        return None


def float_position_ok(X: np.ndarray, position: str) -> bool:
    """Full-dimensional and in the requested position, up to qhull tolerance."""
    h = _hull(X)
    if h is None:
        return False
    if position == STRICT_POSITION:
        return len(h.vertices) == len(X)
    slack = X @ h.equations[:, :-1].T + h.equations[:, -1]
    return bool(np.all(slack.max(axis=1) >= -TOL))


def float_count(X: np.ndarray, mode: str) -> int | None:
    """Estimated a(X) or sa(X) from the hull of the difference set."""
    n = len(X)
    D = (X[:, None, :] - X[None, :, :]).reshape(-1, X.shape[1])
    off = ~np.eye(n, dtype=bool).reshape(-1)
    D = D[off]
    h = _hull(D)
    if h is None:
        return None
    if mode == STRICT:
        return len(h.vertices) // 2
    slack = D @ h.equations[:, :-1].T + h.equations[:, -1]
    on_bd = slack.max(axis=1) >= -TOL
    return int(on_bd.sum()) // 2


# ---------------------------------------------------------------------------
# Exact snapping


def snap(value: float, denominator_bound: int) -> Fraction:
    """Best rational approximation with denominator at most the bound."""
    if not math.isfinite(value):
        raise GeometryError(f"cannot snap non-finite coordinate {value!r}")
    return Fraction(value).limit_denominator(denominator_bound)


def snap_and_verify(points, denominator_bound: int = 10**6, mode: str = STRICT,
                    position: str = STRICT_POSITION, dim: int | None = None) -> tuple[PointConfig, PairReport]:
    """Round to nearby rationals, then check position and count pairs exactly."""
    snapped = []
    for p in points:
        snapped.append(tuple(c if isinstance(c, (int, Fraction)) else snap(float(c), denominator_bound) for c in p))
    if len(set(snapped)) != len(snapped):
        raise GeometryError("points collapsed while snapping")
    config = PointConfig.from_points(snapped)
    if dim is not None and config.dim != dim:
        raise GeometryError(f"expected dimension {dim}, got {config.dim}")
    if not config.is_full_dimensional():
        raise GeometryError(f"affine dimension {config.affine_dimension()} after snapping, expected {config.dim}")
    pc = position_class(config)
    if pc == PositionClass.NOT_CONVEX or (position == STRICT_POSITION and pc != PositionClass.STRICTLY_CONVEX):
        raise GeometryError(f"snapped configuration is {pc.value}")
    return config, count_pairs(config, mode)


# ---------------------------------------------------------------------------
# Moves


def _random_start(rng: random.Random, task: SearchTask, G: int) -> np.ndarray:
    for _ in range(100_000):
        pts = {tuple(rng.randint(-G, G) for _ in range(task.d)) for _ in range(task.n)}
        if len(pts) < task.n:
            continue
        X = np.array(sorted(pts), dtype=float)
        if float_position_ok(X, task.position):
            return X
    raise SearchError(f"no starting configuration on the grid [-{G}, {G}]^{task.d}")


def _propose(X: np.ndarray, rng: random.Random, G: int) -> np.ndarray | None:
    n, d = X.shape
    Y = X.copy()
    i = rng.randrange(n)
    others = [k for k in range(n) if k != i]
    r = rng.random()
    if r < 0.35:
        step = [rng.choice((-1, 0, 1)) for _ in range(d)]
        if not any(step):
            step[rng.randrange(d)] = rng.choice((-1, 1))
        Y[i] = X[i] + step
    elif r < 0.6 and n >= 4:
        a, b, c = rng.sample(others, 3)
        Y[i] = X[a] + X[b] - X[c]  # completes a parallelogram
    elif r < 0.8 and n >= 4:
        a, b, c = rng.sample(others, 3)
        Y[i] = X[a] + rng.choice((-1, 1, 2)) * (X[b] - X[c])  # edge parallel to x_b - x_c
    elif r < 0.92:
        Y[i] = -X[rng.choice(others)]  # central symmetry through the origin
    else:
        Y[i] = [rng.randint(-G, G) for _ in range(d)]
    if np.abs(Y[i]).max() > G:
        return None
    if any(np.array_equal(Y[i], X[k]) for k in others):
        return None
    return Y


# ---------------------------------------------------------------------------
# Annealing


def _better(a: int, b: int | None, objective: str) -> bool:
    return b is None or (a < b if objective == MINIMIZE else a > b)


def _run(task: SearchTask, restart: int):
    """One annealing run: (best exact value, best points, steps used)."""
    rng = random.Random(f"{task.seed}:{restart}")
    G = task.grid_size()
    target = task.target()
    sign = 1 if task.objective == MINIMIZE else -1
    X = _random_start(rng, task, G)
    cur = float_count(X, task.mode)
    best_est = None
    best = (None, None)
    steps = 0
    for step in range(task.budget):
        steps = step + 1
        if cur is not None and _better(cur, best_est, task.objective):
            best_est = cur
            try:
                config, report = snap_and_verify(X.tolist(), task.denominator_bound, task.mode, task.position)
            except GeometryError:
                config = None
            if config is not None and _better(report.count, best[0], task.objective):
                best = (report.count, config)
                if target is not None and report.count == target:
                    break
        T = T_START * (T_END / T_START) ** (step / task.budget)
        Y = _propose(X, rng, G)
        if Y is None or not float_position_ok(Y, task.position):
            continue
        val = float_count(Y, task.mode)
        if val is None:
            continue
        delta = sign * (val - cur)
        if delta <= 0 or rng.random() < math.exp(-delta / T):
            X, cur = Y, val
    return best[0], best[1], steps


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("ANTIPOD_THREADS", "1")))
    except ValueError:
        return 1


def _job(args):
    return _run(*args)


def search_extremal(task: SearchTask) -> SearchResult:
    """Best exactly verified configuration over ``task.restarts`` annealing runs.

    Restarts are independent (each seeds its own RNG from the task seed and
    its index) and run in order; the first restart to reach the target ends
    the search.  With ANTIPOD_THREADS > 1 they run in a process pool and the
    outcome is merged to match the sequential one.
    """
    target = task.target()
    workers = min(_workers(), task.restarts)
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(workers) as pool:
            runs = list(pool.map(_job, [(task, r) for r in range(task.restarts)]))
    else:
        runs = []
        for r in range(task.restarts):
            runs.append(_run(task, r))
            if target is not None and runs[-1][0] == target:
                break
    # truncate after the first run that hit the target, as the sequential loop does
    for idx, run in enumerate(runs):
        if target is not None and run[0] == target:
            runs = runs[: idx + 1]
            break
    history = [v for v, _, _ in runs]
    scored = [(v, idx) for idx, (v, _, _) in enumerate(runs) if v is not None]
    if not scored:
        raise SearchError(f"no verifiable configuration for d = {task.d}, n = {task.n}")
    key = (lambda t: (t[0], t[1])) if task.objective == MINIMIZE else (lambda t: (-t[0], t[1]))
    value, idx = min(scored, key=key)
    config = runs[idx][1]
    report = count_pairs(config, task.mode)
    if report.count != value:
        raise SearchError("exact recount disagrees with the verified value")
    spec = {"name": "search", "params": {"d": task.d, "n": task.n, "mode": task.mode, "objective": task.objective,
                                          "budget": task.budget, "seed": task.seed, "restarts": task.restarts}}
    config = PointConfig(config.dim, config.points, f"search d={task.d} n={task.n}", spec)
    return SearchResult(config, value, history, report, sum(s for _, _, s in runs),
                        target is not None and value == target)


def danzer_grunbaum_probe(d: int, budget: int = 20_000, seed: int = 0, restarts: int = 2) -> SearchResult:
    """Try to make all pairs of 2^d + 1 points antipodal.

    Success would contradict the 2^d bound on antipodal sets, so the pass
    condition is that the best found count stays below C(n, 2).
    """
    n = 2**d + 1
    task = SearchTask(d, n, ANTIPODAL, MAXIMIZE, budget, seed, restarts, position=CONVEX_POSITION)
    return search_extremal(task)


def known_minimum(d: int, n: int) -> int | None:
    return known_value(d, n) if d >= 2 and n >= d + 1 else None

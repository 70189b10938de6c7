"""Shared helpers.  ``float_oracle`` is an independent check built on qhull
alone: it never touches the exact LP code it is compared against."""

from itertools import combinations

import numpy as np
from scipy.spatial import ConvexHull

TOL = 1e-9


def float_oracle(points) -> tuple[int, int]:
    """(a, sa) from the floating-point hull of X - X."""
    X = np.array([[float(c) for c in p] for p in points])
    n = len(X)
    D = np.array([X[i] - X[j] for i in range(n) for j in range(n) if i != j])
    hull = ConvexHull(D)
    sa = len(hull.vertices) // 2
    a = 0
    for i, j in combinations(range(n), 2):
        slack = hull.equations[:, :-1] @ (X[i] - X[j]) + hull.equations[:, -1]
        a += bool(slack.max() >= -TOL)
    return a, sa


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for k in sorted(results):
            terminalreporter.write_line(results[k])

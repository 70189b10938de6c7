"""The eleven acceptance criteria, each run at its stated tolerance.

Under pytest every criterion is one test, and a PASS/FAIL line per criterion
is printed in the terminal summary.  Run as a script for the same lines:

    python tests/test_acceptance.py
"""

import sys
import time

import pytest

from antipod.verify import run_entry

CRITERIA = [
    "oracle_equivalence",
    "planar_law",
    "known_minima",
    "five_point_table",
    "truncation_internals",
    "arcs_product",
    "segment_families",
    "bounds_consistency",
    "convex_position_antipodal_minimum",
    "search_minima",
    "antipodal_set_probe",
]

RESULTS: dict = {}


def _line(number: int, name: str, entry, seconds: float) -> str:
    status = "PASS" if entry.passed else "FAIL"
    held = sum(c.passed for c in entry.checks)
    return f"{status} criterion {number:2d} {name}: {held}/{len(entry.checks)} checks ({seconds:.1f} s)"


def _run(number: int, name: str):
    start = time.perf_counter()
    entry = run_entry(name)
    line = _line(number, name, entry, time.perf_counter() - start)
    RESULTS[number] = line
    print(line)
    return entry


@pytest.mark.slow
@pytest.mark.parametrize("number,name", list(enumerate(CRITERIA, 1)), ids=CRITERIA)
def test_criterion(number, name):
    entry = _run(number, name)
    failed = [f"{c.name}: expected {c.expected}, got {c.actual}" for c in entry.failures()]
    assert entry.passed, "\n".join(failed[:10]) or "no checks ran"


if __name__ == "__main__":
    ok = all(_run(k, name).passed for k, name in enumerate(CRITERIA, 1))
    sys.exit(0 if ok else 1)

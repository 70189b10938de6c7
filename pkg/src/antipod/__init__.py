"""Exact counts of antipodal and strictly antipodal point pairs."""

__version__ = "0.1.0"

from .antipodality import (  # noqa: E402
    ANTIPODAL,
    STRICT,
    Certificate,
    PairReport,
    PointConfig,
    PositionClass,
    count_pairs,
    difference_body_counts,
    pair_test,
    position_class,
)

__all__ = [
    "ANTIPODAL",
    "STRICT",
    "Certificate",
    "PairReport",
    "PointConfig",
    "PositionClass",
    "count_pairs",
    "difference_body_counts",
    "pair_test",
    "position_class",
]

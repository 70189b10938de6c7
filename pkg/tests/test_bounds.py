from fractions import Fraction

import pytest

from antipod.bounds import (
    bound_ratio,
    bound_result,
    bound_table,
    branch_inequality,
    crosspoly_side,
    known_value,
    lower_bound_closed,
    lower_bound_recursive,
    max_pairs,
    proven_lower_bound,
    recursion_rule,
    simplex_side,
    upper_bound,
)

# m(5, n) for n = 6..9 as published: exact, exact, interval, exact
PUBLISHED_ROW_5 = {1: (15, 15), 2: (16, 16), 3: (15, 17), 4: (12, 12)}


def test_row_five_against_published_values():
    for k, (lo, hi) in PUBLISHED_ROW_5.items():
        r = bound_result(5, k)
        assert lo <= r.lower and r.upper <= hi
    assert (bound_result(5, 1).exact, bound_result(5, 2).exact, bound_result(5, 4).exact) == (15, 16, 12)
    assert bound_result(5, 3).exact is None


def test_row_five_recursion_literal():
    # recursion alone, before published values are merged in
    assert [lower_bound_recursive(5, k) for k in range(1, 5)] == [15, 14, 14, 12]


def test_five_eight_upper_from_construction():
    # crosspoly_pyramid(5, 3) is verified to have sa = 16
    assert upper_bound(5, 3) == crosspoly_side(5, 3) == 16
    assert bound_result(5, 3).lower == 15


def test_side_formulas():
    assert simplex_side(4, 2) == 11
    assert crosspoly_side(4, 3) == 9
    assert crosspoly_side(6, 5) == 3 * 5
    assert lower_bound_closed(4, 1) == 10
    assert lower_bound_closed(6, 2) == 20


@pytest.mark.parametrize("d", range(2, 13))
def test_table_consistency(d):
    for k in range(1, d):
        r = bound_result(d, k)
        assert lower_bound_recursive(d, k) <= upper_bound(d, k)
        assert r.lower <= r.upper
        if r.exact is not None:
            assert r.lower <= r.exact <= r.upper


def test_pyramid_over_cross_polytope_row_end():
    for d in range(3, 13):
        assert lower_bound_recursive(d, d - 1) == 3 * (d - 1)
        assert known_value(d, 2 * d - 1) == 3 * (d - 1)


def test_branch_inequality():
    for d in range(4, 30):
        for k in range(2, d - 1):
            lhs, rhs = branch_inequality(d, k)
            assert lhs >= rhs
    with pytest.raises(ValueError):
        branch_inequality(3, 2)


def test_ratio_at_most_two():
    for d in range(2, 201):
        for k in range(1, d):
            assert bound_ratio(d, k) <= 2


def test_known_values():
    assert known_value(2, 7) == 4
    assert known_value(3, 5) == 6
    assert known_value(3, 6) == 3
    assert known_value(3, 9) == 6
    assert known_value(4, 6) == 11
    assert known_value(4, 9) == 8
    assert known_value(5, 12) == 6
    assert known_value(6, 15) == 12
    assert known_value(6, 9) is None
    with pytest.raises(ValueError):
        known_value(3, 3)


def test_proven_lower_bound_never_exceeds_known():
    for d in range(2, 7):
        for n in range(d + 1, 4 * d + 2):
            lb = proven_lower_bound(d, n)
            kv = known_value(d, n)
            if kv is not None:
                assert lb == kv
            assert lb >= (n + 1) // 2


def test_provenance_and_dict():
    r = bound_result(4, 2)
    assert any("exact" in p for p in r.provenance)
    row = r.as_dict()
    assert row["n"] == 6 and row["exact"] == 11
    assert recursion_rule(4, 1) == "seed"


def test_table_shape():
    assert len(bound_table(6)) == sum(d - 1 for d in range(2, 7))


def test_argument_checks():
    with pytest.raises(ValueError):
        lower_bound_recursive(4, 4)
    with pytest.raises(ValueError):
        upper_bound(1, 1)
    assert max_pairs(5) == 10
    assert isinstance(bound_ratio(4, 2), Fraction)

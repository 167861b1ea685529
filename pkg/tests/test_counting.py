"""The exact root-count formula."""

from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permroots import (
    CycleType,
    cycle_types,
    has_mth_root,
    homogeneous_count,
    root_count,
)


def test_root_count_frozen_values():
    assert root_count(CycleType((2, 0)), 2) == 2
    assert root_count(CycleType((4, 0, 0, 0)), 2) == 10
    assert root_count(CycleType((0, 0, 0, 1)), 2) == 0
    assert root_count(CycleType(()), 2) == 1


def test_root_count_depends_only_on_nonzero_pairs():
    assert root_count(CycleType((2,)), 2) == root_count(CycleType((2, 0)), 2)
    assert root_count(CycleType((0, 2)), 3) == root_count(CycleType((0, 2, 0, 0)), 3)


def test_first_power_always_has_exactly_one_root():
    for n in range(9):
        for t in cycle_types(n):
            assert root_count(t, 1) == 1


def test_single_cycle_root_counts():
    # a lone ell-cycle has one m-th root when gcd(ell, m) == 1, none otherwise
    from math import gcd

    for ell in range(1, 10):
        for m in range(1, 10):
            t = CycleType((0,) * (ell - 1) + (1,))
            expected = 1 if gcd(ell, m) == 1 else 0
            assert root_count(t, m) == expected, (ell, m)


def test_count_factors_over_cycle_lengths():
    """A mixed type counts as the product of its single-length slices:
    roots act independently on the cycles of each length."""
    for m in (2, 3, 4, 6):
        for n in range(9):
            for t in cycle_types(n):
                slice_product = 1
                for ell, a in t.nonzero():
                    single = CycleType((0,) * (ell - 1) + (a,))
                    slice_product *= root_count(single, m)
                assert root_count(t, m) == slice_product, (t, m)


def test_zero_exactly_when_existence_fails():
    for n in range(9):
        for t in cycle_types(n):
            for m in (2, 3, 4, 6):
                assert (root_count(t, m) > 0) == has_mth_root(t, m), (t, m)


def test_global_identity_every_permutation_is_some_power():
    # tau -> tau**m is a bijection-free cover: summing root counts over a
    # conjugacy-class decomposition of S_n recovers n! exactly
    for m in (2, 3, 5):
        for n in range(9):
            total = sum(root_count(t, m) * t.class_size() for t in cycle_types(n))
            assert total == factorial(n), (n, m)


def test_homogeneous_count_frozen_values():
    assert homogeneous_count(1, 2, 1, 2) == 1
    assert homogeneous_count(1, 2, 2, 2) == 3
    assert homogeneous_count(2, 2, 1, 2) == 2
    # four 3-cycles left unfused (g=1): single root, the cycle-wise one
    assert homogeneous_count(3, 1, 4, 2) == 1


def test_homogeneous_count_rejects_inadmissible_size():
    with pytest.raises(ValueError):
        homogeneous_count(2, 2, 1, 4)  # only g=4 is admissible for m=4, ell=2
    with pytest.raises(ValueError):
        homogeneous_count(1, 3, 1, 2)


def test_homogeneous_matches_full_formula_on_pure_types():
    # when the solution vector is forced to a single size, the formulas meet
    assert homogeneous_count(2, 4, 2, 4) == root_count(CycleType((0, 8)), 4)
    # identity on 6 points under m=2: all-pairs fusing (p=3 transposition
    # bundles) is one epsilon's contribution, strictly below the full count
    assert homogeneous_count(1, 2, 3, 2) == 15
    assert homogeneous_count(1, 2, 3, 2) < root_count(CycleType((6,)), 2)


@settings(max_examples=60)
@given(st.integers(min_value=0, max_value=10), st.integers(min_value=1, max_value=12))
def test_counts_are_nonnegative_integers(n, m):
    for t in cycle_types(n):
        value = root_count(t, m)
        assert isinstance(value, int)
        assert value >= 0

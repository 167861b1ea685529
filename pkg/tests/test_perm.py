"""Permutations, powers, root existence, and root construction."""

import itertools
from math import factorial, gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permroots import (
    CycleType,
    OracleSizeError,
    Permutation,
    brute_force_roots,
    cycle_type,
    cycle_types,
    enumerate_roots,
    format_cycle_type,
    format_permutation,
    has_mth_root,
    parse_cycle_type,
    parse_permutation,
    power,
    root_count,
)


@st.composite
def _permutations(draw, max_n=8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    return Permutation(draw(st.permutations(list(range(1, n + 1)))))


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation([1, 1])
    with pytest.raises(ValueError):
        Permutation([0, 1])
    with pytest.raises(ValueError):
        Permutation([2, 3])
    assert Permutation([]).degree == 0


def test_one_line_text_round_trip():
    sigma = parse_permutation("2 3 1")
    assert sigma(1) == 2 and sigma(2) == 3 and sigma(3) == 1
    assert format_permutation(sigma) == "2 3 1"
    assert parse_permutation("") == Permutation([])
    with pytest.raises(ValueError):
        parse_permutation("2 3 x")
    with pytest.raises(ValueError):
        parse_permutation("1 2 2")


def test_cycles_are_canonical():
    sigma = Permutation([3, 4, 1, 2, 5])
    assert sigma.cycles() == [(1, 3), (2, 4), (5,)]
    assert sigma.cycle_string() == "(1 3)(2 4)(5)"
    assert Permutation([]).cycle_string() == "()"


def test_group_operations():
    a = Permutation([2, 3, 1])
    assert a * a.inverse() == Permutation.identity(3)
    assert (a * a).image == power(a, 2).image
    assert a**3 == Permutation.identity(3)


def test_cycle_type_frozen_values():
    assert cycle_type(Permutation([2, 1, 4, 3, 5])).a == (1, 2, 0, 0, 0)
    assert cycle_type(Permutation([])).a == ()
    assert cycle_type(Permutation.identity(3)).a == (3, 0, 0)


def test_cycle_type_weight_and_class_size():
    t = CycleType((1, 2, 0, 0, 0))
    assert t.n == 5
    assert t.nonzero() == [(1, 1), (2, 2)]
    assert t.class_size() == factorial(5) // (2**2 * 2)
    assert CycleType(()).class_size() == 1
    with pytest.raises(ValueError):
        CycleType((1, -1))


def test_cycle_type_text_round_trip():
    t = parse_cycle_type("1^2 3")
    assert t.a == (2, 0, 1, 0, 0)  # length n = 5, trailing zeros kept
    assert format_cycle_type(t) == "1^2 3^1"
    assert parse_cycle_type("") == CycleType(())
    assert parse_cycle_type(format_cycle_type(t)) == t
    with pytest.raises(ValueError):
        parse_cycle_type("1^2 1")  # repeated length
    with pytest.raises(ValueError):
        parse_cycle_type("0^2")
    with pytest.raises(ValueError):
        parse_cycle_type("2^")


def test_canonical_permutation_has_the_type():
    for n in range(7):
        for t in cycle_types(n):
            sigma = t.canonical_permutation()
            assert cycle_type(sigma).a == tuple(t.a) + (0,) * (n - len(t.a))


def test_cycle_types_enumerates_partitions():
    partition_counts = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    for n, expected in enumerate(partition_counts):
        types = list(cycle_types(n))
        assert len(types) == expected
        assert len(set(types)) == expected
        assert all(t.n == n for t in types)
        assert sum(t.class_size() for t in types) == factorial(n)


def test_power_splits_an_eight_cycle():
    sigma = Permutation([2, 3, 4, 5, 6, 7, 8, 1])
    squared = power(sigma, 2)
    assert sorted(len(c) for c in squared.cycles()) == [4, 4]
    assert squared.cycles() == [(1, 3, 5, 7), (2, 4, 6, 8)]


def test_power_rejects_nonpositive_exponent():
    with pytest.raises(ValueError):
        power(Permutation.identity(2), 0)


@settings(max_examples=150)
@given(_permutations(max_n=10), st.integers(min_value=1, max_value=12))
def test_power_splitting_law(sigma, m):
    # each L-cycle of sigma contributes gcd(L, m) cycles of length L/gcd(L, m)
    expected = sorted(
        length // gcd(length, m)
        for cyc in sigma.cycles()
        for length in [len(cyc)]
        for _ in range(gcd(length, m))
    )
    assert sorted(len(c) for c in power(sigma, m).cycles()) == expected


def test_has_mth_root_frozen_values():
    assert has_mth_root(cycle_type(Permutation([2, 3, 4, 1])), 2) is False
    assert has_mth_root(CycleType((0, 2)), 2) is True
    assert has_mth_root(Permutation([2, 3, 4, 1]), 3) is True
    assert has_mth_root(CycleType(()), 9) is True


def test_enumerate_roots_frozen_values():
    assert sorted(enumerate_roots(Permutation.identity(2), 2)) == [
        Permutation([1, 2]),
        Permutation([2, 1]),
    ]
    roots_of_id4 = sorted(enumerate_roots(Permutation.identity(4), 2))
    assert len(roots_of_id4) == 10
    assert sorted(enumerate_roots(Permutation([2, 3, 1]), 2)) == [Permutation([3, 1, 2])]
    assert list(enumerate_roots(Permutation([2, 3, 4, 1]), 2)) == []


def test_empty_permutation_is_its_own_root():
    for m in (1, 2, 7):
        assert list(enumerate_roots(Permutation([]), m)) == [Permutation([])]


def test_enumeration_is_deterministic_and_lazy():
    sigma = Permutation.identity(6)
    first = list(enumerate_roots(sigma, 2))
    second = list(enumerate_roots(sigma, 2))
    assert first == second
    assert len(set(first)) == len(first)
    head = list(itertools.islice(enumerate_roots(sigma, 2), 3))
    assert head == first[:3]


def test_every_emitted_root_powers_back():
    for image in itertools.permutations(range(1, 6)):
        sigma = Permutation(image)
        for m in (2, 3, 6):
            for tau in enumerate_roots(sigma, m):
                assert power(tau, m) == sigma


def test_brute_force_frozen_values():
    assert brute_force_roots(Permutation([2, 1]), 2) == []
    assert brute_force_roots(Permutation.identity(2), 2) == [
        Permutation([1, 2]),
        Permutation([2, 1]),
    ]
    assert brute_force_roots(Permutation([]), 5) == [Permutation([])]


def test_brute_force_respects_its_bound():
    with pytest.raises(OracleSizeError):
        brute_force_roots(Permutation.identity(9), 2)
    # the bound is an argument, not ambient state
    assert len(brute_force_roots(Permutation.identity(3), 2, max_n=3)) == 4
    with pytest.raises(OracleSizeError):
        brute_force_roots(Permutation.identity(4), 2, max_n=3)


def test_oracle_equivalence_small_degrees():
    for n in range(5):
        for image in itertools.permutations(range(1, n + 1)):
            sigma = Permutation(image)
            for m in (1, 2, 3, 4, 6):
                expected = brute_force_roots(sigma, m)
                constructed = sorted(enumerate_roots(sigma, m))
                assert constructed == expected, (sigma, m)
                assert root_count(cycle_type(sigma), m) == len(expected)


def test_oracle_equivalence_sampled_larger_degrees():
    samples = [
        (Permutation([2, 3, 4, 5, 6, 7, 1]), 7),        # 7-cycle
        (Permutation([2, 1, 4, 3, 6, 5, 7]), 2),        # 2^3 1
        (Permutation([2, 3, 1, 5, 6, 4, 8, 7]), 3),     # 3^2 2
        (Permutation([2, 3, 4, 1, 6, 5, 8, 7]), 2),     # 4 2^2
        (Permutation.identity(7), 2),
    ]
    for sigma, m in samples:
        expected = brute_force_roots(sigma, m)
        assert sorted(enumerate_roots(sigma, m)) == expected
        assert root_count(cycle_type(sigma), m) == len(expected)


@st.composite
def _permutation_pairs(draw, max_n=5):
    n = draw(st.integers(min_value=0, max_value=max_n))
    values = list(range(1, n + 1))
    return (
        Permutation(draw(st.permutations(values))),
        Permutation(draw(st.permutations(values))),
    )


@settings(max_examples=60, deadline=None)
@given(_permutation_pairs(), st.sampled_from([2, 3, 4]))
def test_roots_transform_under_conjugation(pair, m):
    sigma, rho = pair
    conjugate = rho * sigma * rho.inverse()
    roots = set(enumerate_roots(sigma, m))
    conjugated_roots = {rho * tau * rho.inverse() for tau in roots}
    assert set(enumerate_roots(conjugate, m)) == conjugated_roots
    assert root_count(cycle_type(conjugate), m) == len(roots)

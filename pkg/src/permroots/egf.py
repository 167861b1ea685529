"""Generating functions for m-th-root counts and root-existence probabilities.

Two exact series routes live here.  The multivariate route encodes every
root count at once: with t_ell marking ell-cycles, the exponential
generating function

    exp( sum over ell >= 1 and admissible g of (ell**(g-1) / g) * t_ell**g )

has root_count(a, m) as the coefficient of prod(t_ell**a_ell / a_ell!).
The univariate route counts permutations having at least one m-th root:

    sum over n of r_total(n, m) * x**n / n!  =  prod over ell of
        exp_q(x**ell / ell)   with q = bracket(ell, m),

where exp_q keeps every q-th term of exp (Wilf, "generatingfunctionology",
2nd ed., section 4.8).  For prime powers m = p**r the probabilities
r_total(n, m) / n! are constant on blocks of p consecutive n, which this
module verifies by exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .gsets import g_set
from .numtheory import bracket, is_prime
from .perm import CycleType, cycle_types, has_mth_root
from .series import MultiSeries, UniSeries, one_minus_xp_root


def _require_root_degree(m: int) -> None:
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ValueError(f"m must be a positive integer, got {m!r}")


def _require_bound(value: int, name: str) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise ValueError(f"{name} must be a nonnegative integer, got {value!r}")


def exp_q(q: int, order: int) -> UniSeries:
    """Every q-th term of exp: sum over i of x**(i*q) / (i*q)!."""
    if not isinstance(q, int) or isinstance(q, bool) or q < 1:
        raise ValueError(f"q must be a positive integer, got {q!r}")
    _require_bound(order, "order")
    coeffs = [Fraction(0)] * (order + 1)
    for j in range(0, order + 1, q):
        coeffs[j] = Fraction(1, factorial(j))
    return UniSeries(order, coeffs)


@lru_cache(maxsize=None)
def root_count_egf(m: int, weight_bound: int) -> MultiSeries:
    """The multivariate EGF of m-th-root counts by cycle type.

    Exponential of sum((ell**(g-1) / g) * t_ell**g) over ell >= 1 and
    admissible fusion sizes g with ell * g within the weight bound.
    Memoized: a pure function of (m, weight_bound)."""
    _require_root_degree(m)
    _require_bound(weight_bound, "weight_bound")
    terms = {}
    for ell in range(1, weight_bound + 1):
        for g in g_set(m, ell).elements:
            if ell * g <= weight_bound:
                key = (0,) * (ell - 1) + (g,)
                terms[key] = Fraction(ell ** (g - 1), g)
    return MultiSeries(weight_bound, terms).exp()


def root_count_from_egf(m: int, t: CycleType) -> int:
    """root_count recovered from the EGF: the coefficient of
    prod(t_ell**a_ell) times prod(a_ell!)."""
    series = root_count_egf(m, t.n)
    value = series.coefficient(t.a)
    for count in t.a:
        value *= factorial(count)
    assert value.denominator == 1, f"non-integer EGF root count for {t}, m={m}"
    return value.numerator


def prime_root_count_egf(p: int, weight_bound: int) -> MultiSeries:
    """The prime specialization of root_count_egf:

        exp( sum(i**(p-1)/p * t_i**p, all i) + sum(t_j, p not dividing j) )

    since the admissible sizes for prime p are {1, p} when p does not
    divide ell and {p} when it does.  Asserted equal to the general
    construction on every call."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p!r}")
    _require_bound(weight_bound, "weight_bound")
    terms: dict[tuple[int, ...], Fraction] = {}
    for i in range(1, weight_bound + 1):
        if i * p <= weight_bound:
            terms[(0,) * (i - 1) + (p,)] = Fraction(i ** (p - 1), p)
        if i % p:
            terms[(0,) * (i - 1) + (1,)] = Fraction(1)
    result = MultiSeries(weight_bound, terms).exp()
    assert result == root_count_egf(p, weight_bound), (
        f"prime specialization disagrees with general EGF for p={p}"
    )
    return result


@lru_cache(maxsize=None)
def r_total_series(m: int, order: int) -> UniSeries:
    """EGF of r_total: prod over ell of exp_q(x**ell / ell) with
    q = bracket(ell, m).  Factors with ell > order are 1 up to the
    truncation, so the product runs ell = 1..order only.  Memoized."""
    _require_root_degree(m)
    _require_bound(order, "order")
    series = UniSeries.one(order)
    for ell in range(1, order + 1):
        q = bracket(ell, m)
        factor = exp_q(q, order // ell).substitute_scaled_power(
            Fraction(1, ell), ell, order
        )
        series = series * factor
    return series


def r_total_from_types(n: int, m: int) -> int:
    """Permutations in S_n with an m-th root, summed class by class over
    the cycle types passing the existence criterion."""
    _require_root_degree(m)
    _require_bound(n, "n")
    return sum(t.class_size() for t in cycle_types(n) if has_mth_root(t, m))


def r_total(n: int, m: int) -> int:
    """Number of permutations in S_n having at least one m-th root.

    Series route (n! times the x**n coefficient of r_total_series),
    cross-checked against the classification sum on every call."""
    _require_root_degree(m)
    _require_bound(n, "n")
    value = r_total_series(m, n).coefficient(n) * factorial(n)
    assert value.denominator == 1, f"non-integer r_total at n={n}, m={m}"
    by_types = r_total_from_types(n, m)
    assert value.numerator == by_types, (
        f"series and classification routes disagree at n={n}, m={m}: "
        f"{value.numerator} vs {by_types}"
    )
    return value.numerator


def root_probability(n: int, m: int) -> Fraction:
    """Probability that a uniform permutation of S_n has an m-th root."""
    return Fraction(r_total(n, m), factorial(n))


def prime_power_block_series(p: int, r: int, order: int) -> UniSeries:
    """The series G with r_total_series(p**r) == G / (1 - x).

    Splitting the product over ell by divisibility by p: the coprime part
    prod(exp(x**ell / ell), p not dividing ell) telescopes to
    (1 - x**p)**(1/p) / (1 - x), so

        G = (1 - x**p)**(1/p) * prod(exp_q(x**(jp) / (jp)), j >= 1)

    with q = p**r.  G has nonzero coefficients only at exponents divisible
    by p, which is why the probabilities are constant on blocks of p
    consecutive n: dividing by (1 - x) turns isolated coefficients into
    runs of equal partial sums."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p!r}")
    if not isinstance(r, int) or isinstance(r, bool) or r < 1:
        raise ValueError(f"r must be a positive integer, got {r!r}")
    _require_bound(order, "order")
    m = p**r
    series = one_minus_xp_root(p, order)
    for ell in range(p, order + 1, p):
        factor = exp_q(m, order // ell).substitute_scaled_power(
            Fraction(1, ell), ell, order
        )
        series = series * factor
    return series


@dataclass(frozen=True)
class ProbabilityBlock:
    """One run of q consecutive degrees and their root probabilities."""

    j: int
    ns: tuple[int, ...]
    probabilities: tuple[Fraction, ...]

    @property
    def equal(self) -> bool:
        return len(set(self.probabilities)) == 1


@dataclass(frozen=True)
class EqualityReport:
    q: int
    r: int
    m: int
    blocks: tuple[ProbabilityBlock, ...]

    @property
    def all_equal(self) -> bool:
        return all(block.equal for block in self.blocks)


def check_prime_power_equalities(q: int, r: int, blocks: int) -> EqualityReport:
    """For m = q**r with q prime, the root probability is the same at
    n = jq, jq+1, ..., jq+q-1.  Verify blocks j = 0..blocks-1 by exact
    arithmetic and report the probabilities found."""
    if not is_prime(q):
        raise ValueError(f"q must be prime, got {q!r}")
    if not isinstance(r, int) or isinstance(r, bool) or r < 1:
        raise ValueError(f"r must be a positive integer, got {r!r}")
    if not isinstance(blocks, int) or isinstance(blocks, bool) or blocks < 1:
        raise ValueError(f"blocks must be a positive integer, got {blocks!r}")
    m = q**r
    found = []
    for j in range(blocks):
        ns = tuple(range(j * q, (j + 1) * q))
        probabilities = tuple(root_probability(n, m) for n in ns)
        found.append(ProbabilityBlock(j, ns, probabilities))
    return EqualityReport(q, r, m, tuple(found))

"""Exact m-th-root counts from the cycle type alone.

The number of m-th roots of any permutation with a_ell cycles of length
ell factors over the lengths: each ell contributes

    a_ell! * sum over solution vectors eps of
             prod_i ell**((g_i - 1) * eps_i) / (g_i**eps_i * eps_i!)

with g_1 < ... < g_k the admissible fusion sizes capped at a_ell.  The sum
counts the ways to bundle the a_ell cycles into fusions (divided by the
a_ell! relabelings, restored up front) times the (g-1)! * ell**(g-1)
interleavings per bundle.  Arithmetic is exact rationals throughout; each
per-ell factor and the final product are asserted to be integers.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .gsets import g_set, g_set_bounded, iter_epsilons
from .perm import CycleType


def _require_root_degree(m: int) -> None:
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ValueError(f"m must be a positive integer, got {m!r}")


def root_count(t: CycleType, m: int) -> int:
    """Number of m-th roots of any permutation with cycle type t.

    Depends only on the nonzero (ell, a_ell) pairs.  Zero exactly when
    some ell admits no solution vector, i.e. the existence criterion
    fails; m == 1 always gives 1.
    """
    _require_root_degree(m)
    total = 1
    for ell, a in t.nonzero():
        sizes = g_set_bounded(m, ell, a).elements
        acc = Fraction(0)
        for eps in iter_epsilons(sizes, a):
            term = Fraction(1)
            for g, e in zip(sizes, eps):
                if e:
                    term *= Fraction(ell ** ((g - 1) * e), g**e * factorial(e))
            acc += term
        factor = factorial(a) * acc
        assert factor.denominator == 1, f"non-integer factor for ell={ell}, a={a}, m={m}"
        total *= factor.numerator
    return total


def homogeneous_count(ell: int, g: int, p: int, m: int) -> int:
    """Roots of a permutation made of g*p cycles of length ell when all
    fusions have the same admissible size g: (g*p)! * ell**(p*(g-1)) /
    (g**p * p!).  Rejects g not admissible for (m, ell)."""
    _require_root_degree(m)
    if not isinstance(p, int) or isinstance(p, bool) or p < 0:
        raise ValueError(f"p must be a nonnegative integer, got {p!r}")
    if g not in g_set(m, ell).elements:
        raise ValueError(f"g={g} is not an admissible fusion size for m={m}, ell={ell}")
    value = Fraction(factorial(g * p) * ell ** (p * (g - 1)), g**p * factorial(p))
    assert value.denominator == 1, f"non-integer homogeneous count for {(ell, g, p, m)}"
    return value.numerator

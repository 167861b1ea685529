"""Prime-factorization arithmetic underlying root existence for permutations.

Everything is deterministic trial division on desk-scale integers.  The one
non-standard quantity is ``bracket(ell, m)``: the product, over primes p
dividing ell, of the full power of p contained in m.  It always divides m,
equals 1 exactly when gcd(ell, m) == 1, and is the modulus that decides
whether a permutation with a given number of ell-cycles has an m-th root
(the Knopfmacher-Warlimont criterion; see Wilf, "generatingfunctionology",
2nd ed., section 4.8).
"""

from __future__ import annotations

Factorization = list[tuple[int, int]]


def _require_positive(value: int, name: str) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")


def factorize(n: int) -> Factorization:
    """Prime factorization of n as (prime, exponent) pairs, primes increasing.

    factorize(1) == [] (empty product).
    """
    _require_positive(n, "n")
    out: Factorization = []
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if rest > 1:
        out.append((rest, 1))
    return out


def is_prime(p: int) -> bool:
    if not isinstance(p, int) or isinstance(p, bool) or p < 2:
        return False
    return factorize(p) == [(p, 1)]


def nu_p(n: int, p: int) -> int:
    """p-adic valuation of n: the exponent of the prime p in n."""
    _require_positive(n, "n")
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p!r}")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def bracket(ell: int, m: int) -> int:
    """Product over primes p dividing ell of p**nu_p(m).

    Divides m, and equals 1 iff gcd(ell, m) == 1.  A permutation whose
    cycle type has a_ell cycles of length ell (for every ell) admits an
    m-th root iff bracket(ell, m) divides a_ell for every ell.
    """
    _require_positive(ell, "ell")
    _require_positive(m, "m")
    out = 1
    for p, _ in factorize(ell):
        out *= p ** nu_p(m, p)
    return out


def divisors(m: int) -> list[int]:
    """All positive divisors of m, strictly increasing."""
    _require_positive(m, "m")
    small: list[int] = []
    large: list[int] = []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
        d += 1
    large.reverse()
    return small + large

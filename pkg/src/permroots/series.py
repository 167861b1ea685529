"""Exact truncated power series over Fraction, in one variable or many.

UniSeries is dense in a single variable x up to a fixed truncation order.
MultiSeries is sparse in countably many variables t_1, t_2, ... truncated
by total weight sum(ell * e_ell), the natural grading when t_ell marks
cycles of length ell.  All coefficients are Fractions, so every identity
checked against these classes is exact, not floating-point.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"coefficients must be Fraction or int, got {value!r}")


class UniSeries:
    """A polynomial truncation sum(coeffs[j] * x**j, j = 0..order)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=()):
        if not isinstance(order, int) or isinstance(order, bool) or order < 0:
            raise ValueError(f"order must be a nonnegative integer, got {order!r}")
        coeffs = [_as_fraction(c) for c in coeffs]
        if len(coeffs) > order + 1:
            raise ValueError(f"{len(coeffs)} coefficients exceed order {order}")
        coeffs.extend([Fraction(0)] * (order + 1 - len(coeffs)))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, order: int) -> "UniSeries":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "UniSeries":
        return cls(order, [Fraction(1)])

    @classmethod
    def monomial(cls, order: int, exponent: int, coeff=1) -> "UniSeries":
        if not 0 <= exponent <= order:
            raise ValueError(f"exponent {exponent} outside 0..{order}")
        coeffs = [Fraction(0)] * (exponent + 1)
        coeffs[exponent] = _as_fraction(coeff)
        return cls(order, coeffs)

    def coefficient(self, j: int) -> Fraction:
        if not 0 <= j <= self.order:
            raise ValueError(f"coefficient {j} outside truncation order {self.order}")
        return self.coeffs[j]

    def _check_order(self, other: "UniSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "UniSeries") -> "UniSeries":
        self._check_order(other)
        return UniSeries(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "UniSeries") -> "UniSeries":
        self._check_order(other)
        return UniSeries(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        if isinstance(other, UniSeries):
            self._check_order(other)
            out = [Fraction(0)] * (self.order + 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs[: self.order + 1 - i]):
                    if b:
                        out[i + j] += a * b
            return UniSeries(self.order, out)
        scalar = _as_fraction(other)
        return UniSeries(self.order, [scalar * a for a in self.coeffs])

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, UniSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"UniSeries(order={self.order}, coeffs={list(self.coeffs)})"

    def substitute_scaled_power(self, c, k: int, order: int) -> "UniSeries":
        """The series in x obtained by substituting c * x**k for the
        variable, truncated at the given order.  Requires enough source
        coefficients: self.order * k >= order."""
        if not isinstance(k, int) or isinstance(k, bool) or k < 1:
            raise ValueError(f"k must be a positive integer, got {k!r}")
        c = _as_fraction(c)
        if self.order < order // k:
            raise ValueError(
                f"source order {self.order} too small to reach order {order} with k={k}"
            )
        out = [Fraction(0)] * (order + 1)
        power = Fraction(1)
        for j, a in enumerate(self.coeffs):
            if j * k > order:
                break
            if a:
                out[j * k] = a * power
            power *= c
        return UniSeries(order, out)

    def exp(self) -> "UniSeries":
        """exp(self) for zero constant term, by the derivative recurrence
        n * b_n = sum(j * a_j * b_{n-j}, j = 1..n)."""
        if self.coeffs[0]:
            raise ValueError("exp needs a zero constant term")
        b = [Fraction(1)] + [Fraction(0)] * self.order
        for n in range(1, self.order + 1):
            acc = Fraction(0)
            for j in range(1, n + 1):
                if self.coeffs[j]:
                    acc += j * self.coeffs[j] * b[n - j]
            b[n] = acc / n
        return UniSeries(self.order, b)

    def partial_sums(self) -> "UniSeries":
        """self / (1 - x): coefficient n becomes sum(coeffs[0..n])."""
        out = []
        acc = Fraction(0)
        for a in self.coeffs:
            acc += a
            out.append(acc)
        return UniSeries(self.order, out)


def generalized_binomial(alpha: Fraction, k: int) -> Fraction:
    """Binomial coefficient alpha over k for rational alpha:
    alpha * (alpha-1) * ... * (alpha-k+1) / k!."""
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise ValueError(f"k must be a nonnegative integer, got {k!r}")
    alpha = _as_fraction(alpha)
    num = Fraction(1)
    for i in range(k):
        num *= alpha - i
    return num / factorial(k)


def one_minus_xp_root(p: int, order: int) -> "UniSeries":
    """(1 - x**p)**(1/p) as an exact truncated series: the one place a
    non-integer exponent appears, expanded with rational binomials
    sum(binom(1/p, k) * (-1)**k * x**(p*k))."""
    if not isinstance(p, int) or isinstance(p, bool) or p < 1:
        raise ValueError(f"p must be a positive integer, got {p!r}")
    alpha = Fraction(1, p)
    coeffs = [Fraction(0)] * (order + 1)
    for k in range(order // p + 1):
        coeffs[p * k] = generalized_binomial(alpha, k) * (-1) ** k
    return UniSeries(order, coeffs)


def _strip(key: tuple[int, ...]) -> tuple[int, ...]:
    end = len(key)
    while end and not key[end - 1]:
        end -= 1
    return tuple(key[:end])


def _weight(key: tuple[int, ...]) -> int:
    return sum(ell * e for ell, e in enumerate(key, start=1))


class MultiSeries:
    """Sparse exact series in t_1, t_2, ... truncated by total weight.

    Keys are exponent tuples with trailing zeros stripped; terms whose
    weight exceeds the bound are dropped by every operation."""

    __slots__ = ("weight_bound", "terms")

    def __init__(self, weight_bound: int, terms=None):
        if not isinstance(weight_bound, int) or isinstance(weight_bound, bool) or weight_bound < 0:
            raise ValueError(f"weight_bound must be a nonnegative integer, got {weight_bound!r}")
        clean: dict[tuple[int, ...], Fraction] = {}
        for key, coeff in (terms or {}).items():
            key = _strip(tuple(key))
            for e in key:
                if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                    raise ValueError(f"exponents must be nonnegative ints, got {key!r}")
            coeff = _as_fraction(coeff)
            if coeff and _weight(key) <= weight_bound:
                clean[key] = clean.get(key, Fraction(0)) + coeff
                if not clean[key]:
                    del clean[key]
        self.weight_bound = weight_bound
        self.terms = clean

    @classmethod
    def zero(cls, weight_bound: int) -> "MultiSeries":
        return cls(weight_bound)

    @classmethod
    def one(cls, weight_bound: int) -> "MultiSeries":
        return cls(weight_bound, {(): Fraction(1)})

    @classmethod
    def monomial(cls, weight_bound: int, exponents, coeff=1) -> "MultiSeries":
        return cls(weight_bound, {tuple(exponents): coeff})

    def coefficient(self, exponents) -> Fraction:
        key = _strip(tuple(exponents))
        if _weight(key) > self.weight_bound:
            raise ValueError(f"weight of {key!r} exceeds truncation bound {self.weight_bound}")
        return self.terms.get(key, Fraction(0))

    def _check_bound(self, other: "MultiSeries") -> None:
        if self.weight_bound != other.weight_bound:
            raise ValueError(f"weight bound mismatch: {self.weight_bound} vs {other.weight_bound}")

    def __add__(self, other: "MultiSeries") -> "MultiSeries":
        self._check_bound(other)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + coeff
        return MultiSeries(self.weight_bound, out)

    def __mul__(self, other):
        if isinstance(other, MultiSeries):
            self._check_bound(other)
            out: dict[tuple[int, ...], Fraction] = {}
            for k1, c1 in self.terms.items():
                w1 = _weight(k1)
                for k2, c2 in other.terms.items():
                    if w1 + _weight(k2) > self.weight_bound:
                        continue
                    longer, shorter = (k1, k2) if len(k1) >= len(k2) else (k2, k1)
                    key = tuple(
                        a + (shorter[i] if i < len(shorter) else 0)
                        for i, a in enumerate(longer)
                    )
                    out[key] = out.get(key, Fraction(0)) + c1 * c2
            return MultiSeries(self.weight_bound, out)
        scalar = _as_fraction(other)
        return MultiSeries(
            self.weight_bound, {k: scalar * c for k, c in self.terms.items()}
        )

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiSeries)
            and self.weight_bound == other.weight_bound
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.weight_bound, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"MultiSeries(weight_bound={self.weight_bound}, {len(self.terms)} terms)"

    def exp(self) -> "MultiSeries":
        """exp(self) for zero constant term, as sum(self**k / k!); each
        power raises the minimum weight, so the loop exits early once
        self**k is empty under the bound."""
        if self.terms.get((), Fraction(0)):
            raise ValueError("exp needs a zero constant term")
        result = MultiSeries.one(self.weight_bound)
        term = MultiSeries.one(self.weight_bound)
        for k in range(1, self.weight_bound + 1):
            term = term * self * Fraction(1, k)
            if not term.terms:
                break
            result = result + term
        return result


def fraction_to_text(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def fraction_from_text(text: str) -> Fraction:
    return Fraction(text)


def uni_to_json(series: UniSeries) -> list[str]:
    """Dense array of "num/den" strings, index = exponent."""
    return [fraction_to_text(c) for c in series.coeffs]


def uni_from_json(data: list[str]) -> UniSeries:
    if not data:
        raise ValueError("univariate series JSON must be a nonempty array")
    return UniSeries(len(data) - 1, [fraction_from_text(c) for c in data])


def multi_to_json(series: MultiSeries) -> dict:
    """{"weight_bound": B, "terms": {"e1,e2,...": "num/den"}}, keys with
    trailing zeros stripped; the constant term is keyed ""."""
    terms = {
        ",".join(map(str, key)): fraction_to_text(coeff)
        for key, coeff in sorted(series.terms.items())
    }
    return {"weight_bound": series.weight_bound, "terms": terms}


def multi_from_json(data: dict) -> MultiSeries:
    terms = {}
    for key_text, coeff_text in data["terms"].items():
        key = tuple(int(e) for e in key_text.split(",")) if key_text else ()
        terms[key] = fraction_from_text(coeff_text)
    return MultiSeries(data["weight_bound"], terms)

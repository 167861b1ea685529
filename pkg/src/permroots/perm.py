"""Concrete permutations: cycle structure, powers, m-th-root existence,
constructive enumeration of all m-th roots, and a brute-force oracle.

Permutations act on {1, ..., n} and are stored in one-line notation
(image[i-1] is where i goes).  The m-th power of a single L-cycle splits
it into gcd(L, m) cycles of length L/gcd(L, m); root construction inverts
that splitting by fusing g existing ell-cycles into one (g*ell)-cycle of
the root, interleaving their entries.  Every constructed root is verified
by re-powering before it is emitted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial

from .gsets import g_set_bounded, iter_epsilons
from .numtheory import bracket


class OracleSizeError(ValueError):
    """Raised when the exhaustive S_n scan is asked to exceed its bound."""


def _require_root_degree(m: int) -> None:
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ValueError(f"m must be a positive integer, got {m!r}")


def _image_power(image: tuple[int, ...], m: int) -> tuple[int, ...]:
    """m-th power of a one-line image, one rotation per cycle."""
    n = len(image)
    out = [0] * n
    seen = [False] * n
    for start in range(1, n + 1):
        if seen[start - 1]:
            continue
        cyc = [start]
        seen[start - 1] = True
        x = image[start - 1]
        while x != start:
            seen[x - 1] = True
            cyc.append(x)
            x = image[x - 1]
        length = len(cyc)
        shift = m % length
        for i in range(length):
            out[cyc[i] - 1] = cyc[(i + shift) % length]
    return tuple(out)


class Permutation:
    """A permutation of {1, ..., n} in one-line notation."""

    __slots__ = ("image",)

    def __init__(self, image):
        image = tuple(image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValueError(f"not a permutation of 1..{len(image)}: {image!r}")
        self.image = image

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n: int, cycles) -> "Permutation":
        """Build from disjoint cycles; elements not mentioned are fixed."""
        image = list(range(1, n + 1))
        touched = set()
        for cyc in cycles:
            cyc = tuple(cyc)
            for x in cyc:
                if not 1 <= x <= n:
                    raise ValueError(f"cycle entry {x} outside 1..{n}")
                if x in touched:
                    raise ValueError(f"cycles are not disjoint at {x}")
                touched.add(x)
            for i, x in enumerate(cyc):
                image[x - 1] = cyc[(i + 1) % len(cyc)]
        return cls(image)

    @property
    def degree(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (self * other)(x) == self(other(x))."""
        if self.degree != other.degree:
            raise ValueError("cannot compose permutations of different degrees")
        return Permutation(self.image[y - 1] for y in other.image)

    def inverse(self) -> "Permutation":
        image = [0] * self.degree
        for i, y in enumerate(self.image, start=1):
            image[y - 1] = i
        return Permutation(image)

    def __pow__(self, m: int) -> "Permutation":
        return power(self, m)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.image == other.image

    def __hash__(self) -> int:
        return hash(self.image)

    def __lt__(self, other: "Permutation") -> bool:
        return self.image < other.image

    def __repr__(self) -> str:
        return f"Permutation({list(self.image)})"

    def __str__(self) -> str:
        return format_permutation(self)

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles (fixed points included), each rotated so its
        minimum comes first, listed in order of those minima."""
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            x = self.image[start - 1]
            while x != start:
                seen[x - 1] = True
                cyc.append(x)
                x = self.image[x - 1]
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        if self.degree == 0:
            return "()"
        return "".join("(" + " ".join(map(str, cyc)) + ")" for cyc in self.cycles())


@dataclass(frozen=True)
class CycleType:
    """Multiplicity vector a, where a[ell-1] counts the ell-cycles.

    The weight n is sum(ell * a[ell-1]); trailing zeros are preserved, so
    vectors differing only in trailing zeros compare unequal.
    """

    a: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        for count in self.a:
            if not isinstance(count, int) or isinstance(count, bool) or count < 0:
                raise ValueError(f"multiplicities must be nonnegative ints, got {self.a!r}")

    @property
    def n(self) -> int:
        return sum(ell * count for ell, count in enumerate(self.a, start=1))

    def nonzero(self) -> list[tuple[int, int]]:
        """(ell, a_ell) pairs with a_ell > 0, ell increasing."""
        return [(ell, count) for ell, count in enumerate(self.a, start=1) if count]

    def class_size(self) -> int:
        """Number of permutations in S_n with this cycle type."""
        size = factorial(self.n)
        for ell, count in self.nonzero():
            size //= ell**count * factorial(count)
        return size

    def canonical_permutation(self) -> Permutation:
        """The permutation of this type whose cycles use consecutive
        integers in increasing cycle length: e.g. 1^2 2 -> (1)(2)(3 4)."""
        cycles = []
        nxt = 1
        for ell, count in self.nonzero():
            for _ in range(count):
                cycles.append(range(nxt, nxt + ell))
                nxt += ell
        return Permutation.from_cycles(self.n, cycles)


def cycle_type(sigma: Permutation) -> CycleType:
    a = [0] * sigma.degree
    for cyc in sigma.cycles():
        a[len(cyc) - 1] += 1
    return CycleType(tuple(a))


def cycle_types(n: int):
    """All cycle types of S_n (partitions of n as multiplicity vectors).

    Largest parts first; n == 0 yields the single empty type.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    a = [0] * n

    def rec(remaining: int, max_part: int):
        if remaining == 0:
            yield CycleType(tuple(a))
            return
        for part in range(min(remaining, max_part), 0, -1):
            for count in range(remaining // part, 0, -1):
                a[part - 1] = count
                yield from rec(remaining - part * count, part - 1)
                a[part - 1] = 0

    yield from rec(n, n)


def power(sigma: Permutation, m: int) -> Permutation:
    """sigma**m, computed cycle by cycle (each L-cycle advances by m mod L)."""
    _require_root_degree(m)
    return Permutation(_image_power(sigma.image, m))


def has_mth_root(t, m: int) -> bool:
    """Whether permutations of cycle type t admit an m-th root.

    Criterion: bracket(ell, m) divides a_ell for every ell (Wilf,
    "generatingfunctionology", 2nd ed., theorem 4.8.2).  Accepts a
    CycleType or a Permutation.
    """
    _require_root_degree(m)
    if isinstance(t, Permutation):
        t = cycle_type(t)
    return all(count % bracket(ell, m) == 0 for ell, count in t.nonzero())


def _fusions(bundle, ell: int, m: int):
    """All (g*ell)-cycles D with D**m equal to the product of the bundle,
    as {x: D(x)} dicts.

    The m-th power of a (g*ell)-cycle reads off g cycles of length ell
    along every m-th position, one per residue class mod g.  So D is
    rebuilt by interleaving: the bundle cycle holding the smallest element
    is pinned to residue class 0 starting at position 0 (which kills the
    rotational symmetry of D), and each ordering of the other g-1 cycles,
    combined with each of the ell rotations of each, fills classes 1..g-1.
    Exactly (g-1)! * ell**(g-1) distinct cycles result.
    """
    g = len(bundle)
    span = g * ell
    anchor, others = bundle[0], bundle[1:]
    for ordering in itertools.permutations(others):
        for offsets in itertools.product(range(ell), repeat=g - 1):
            seq = [0] * span
            for t in range(ell):
                seq[t * m % span] = anchor[t]
            for j in range(1, g):
                cyc = ordering[j - 1]
                off = offsets[j - 1]
                for t in range(ell):
                    seq[(j + t * m) % span] = cyc[(off + t) % ell]
            yield {seq[i]: seq[(i + 1) % span] for i in range(span)}


def _bundle_partitions(cycles, counts):
    """Partitions of the given cycles into unordered bundles, counts[g] of
    size g.  Anchoring each bundle at the remaining cycle with the smallest
    minimum produces every partition exactly once, deterministically."""
    if not cycles:
        yield []
        return
    anchor, rest = cycles[0], cycles[1:]
    for g in sorted(counts):
        remaining_counts = dict(counts)
        remaining_counts[g] -= 1
        if not remaining_counts[g]:
            del remaining_counts[g]
        for companions in itertools.combinations(rest, g - 1):
            chosen = set(companions)
            leftover = [c for c in rest if c not in chosen]
            for tail in _bundle_partitions(leftover, remaining_counts):
                yield [(anchor, *companions)] + tail


def _bundle_products(bundles, ell: int, m: int):
    """Cartesian product of per-bundle fusions, merged into one dict."""
    if not bundles:
        yield {}
        return
    head, rest = bundles[0], bundles[1:]
    for head_map in _fusions(head, ell, m):
        for rest_map in _bundle_products(rest, ell, m):
            merged = dict(head_map)
            merged.update(rest_map)
            yield merged


def _ell_part_maps(cycles, ell: int, m: int):
    """All restrictions of an m-th root to the ell-cycles' support."""
    a = len(cycles)
    sizes = g_set_bounded(m, ell, a).elements
    for eps in iter_epsilons(sizes, a):
        counts = {g: e for g, e in zip(sizes, eps) if e}
        for bundles in _bundle_partitions(cycles, counts):
            yield from _bundle_products(bundles, ell, m)


def enumerate_roots(sigma: Permutation, m: int):
    """Yield every tau with tau**m == sigma, each verified by re-powering.

    Streams lazily.  The order is deterministic: cycle lengths ell
    ascending, solution vectors lexicographic, bundle partitions in
    anchored order, interleavings by companion order then rotation offset.
    The empty permutation is its own m-th root for every m.
    """
    _require_root_degree(m)
    if not has_mth_root(cycle_type(sigma), m):
        return
    by_len: dict[int, list[tuple[int, ...]]] = {}
    for cyc in sigma.cycles():
        by_len.setdefault(len(cyc), []).append(cyc)
    lengths = sorted(by_len)
    n = sigma.degree
    target = sigma.image

    def assemble(idx: int, mapping: dict[int, int]):
        if idx == len(lengths):
            image = tuple(mapping[x] for x in range(1, n + 1))
            assert _image_power(image, m) == target, "constructed root failed re-powering"
            yield Permutation(image)
            return
        ell = lengths[idx]
        for part in _ell_part_maps(by_len[ell], ell, m):
            mapping.update(part)
            yield from assemble(idx + 1, mapping)

    yield from assemble(0, {})


def brute_force_roots(sigma: Permutation, m: int, max_n: int = 8) -> list[Permutation]:
    """All m-th roots of sigma by scanning S_n, in lexicographic order.

    Independent of the constructive enumerator: no shared cycle logic
    beyond raw powering.  Refuses n > max_n (the bound is an argument,
    not ambient state)."""
    _require_root_degree(m)
    n = sigma.degree
    if n > max_n:
        raise OracleSizeError(
            f"exhaustive scan over S_{n} refused (bound max_n={max_n}); pass a larger max_n"
        )
    target = sigma.image
    return [
        Permutation(cand)
        for cand in itertools.permutations(range(1, n + 1))
        if _image_power(cand, m) == target
    ]


def parse_permutation(text: str) -> Permutation:
    """One-line notation: "2 3 1" means 1->2, 2->3, 3->1.  "" is S_0."""
    try:
        image = tuple(int(tok) for tok in text.split())
    except ValueError as exc:
        raise ValueError(f"permutation text must be whitespace-separated integers: {text!r}") from exc
    return Permutation(image)


def format_permutation(sigma: Permutation) -> str:
    return " ".join(map(str, sigma.image))


def parse_cycle_type(text: str) -> CycleType:
    """Cycle-type text: tokens "ell^count" (or bare "ell" for count 1),
    lengths with zero multiplicity omitted: "1^2 3" is a=(2, 0, 1)."""
    counts: dict[int, int] = {}
    for token in text.split():
        ell_str, sep, count_str = token.partition("^")
        try:
            ell = int(ell_str)
            count = int(count_str) if sep else 1
        except ValueError as exc:
            raise ValueError(f"bad cycle-type token {token!r}") from exc
        if ell < 1 or count < 1:
            raise ValueError(f"bad cycle-type token {token!r}: need ell >= 1 and count >= 1")
        if ell in counts:
            raise ValueError(f"cycle length {ell} repeated in {text!r}")
        counts[ell] = count
    n = sum(ell * count for ell, count in counts.items())
    a = [0] * n
    for ell, count in counts.items():
        a[ell - 1] = count
    return CycleType(tuple(a))


def format_cycle_type(t: CycleType) -> str:
    return " ".join(f"{ell}^{count}" for ell, count in t.nonzero())

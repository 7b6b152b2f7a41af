"""Integer partitions, compositions, partition sequences, and the exact
counting primitives built on them.

Partitions are stored with parts sorted non-increasing; the multiplicity view
(how many parts equal i) is derived on demand.  Everything here is exact:
counts are Python integers, ratios are ``fractions.Fraction``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Iterator

from .errors import NoSuchPartError

__all__ = [
    "IntegerPartition",
    "Composition",
    "PartitionSequence",
    "partitions",
    "partition_sequences",
    "z_of",
    "z_of_seq",
    "kappa",
    "refinement_targets",
    "refinement_targets_seq",
    "odd_refinements",
    "odd_refinements_seq",
    "lambda_coeff",
    "stirling_first",
    "separated_stirling",
    "falling_factorial",
    "binomial",
]


# ---------------------------------------------------------------------------
# tuple-level helpers (everything hot works on plain sorted tuples)


def _mults(parts: tuple[int, ...]) -> dict[int, int]:
    m: dict[int, int] = {}
    for p in parts:
        m[p] = m.get(p, 0) + 1
    return m


def _merge_sorted(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(a + b, reverse=True))


def _remove_part(parts: tuple[int, ...], value: int) -> tuple[int, ...]:
    idx = parts.index(value)
    return parts[:idx] + parts[idx + 1 :]


@cache
def _partition_list(n: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n as non-increasing tuples, reverse-lexicographic."""
    if n == 0:
        return ((),)
    out: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def rec(remaining: int, maxpart: int) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(remaining, maxpart), 0, -1):
            prefix.append(p)
            rec(remaining - p, p)
            prefix.pop()

    rec(n, n)
    return tuple(out)


@cache
def _partitions_into(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Partitions of n into exactly k positive parts, reverse-lexicographic."""
    if k == 0:
        return ((),) if n == 0 else ()
    if k > n:
        return ()
    out: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def rec(remaining: int, slots: int, maxpart: int) -> None:
        if slots == 1:
            if remaining <= maxpart:
                out.append(tuple(prefix) + (remaining,))
            return
        hi = min(maxpart, remaining - (slots - 1))
        lo = -(-remaining // slots)  # smallest feasible non-increasing head
        for p in range(hi, lo - 1, -1):
            prefix.append(p)
            rec(remaining - p, slots - 1, p)
            prefix.pop()

    rec(n, k, n)
    return tuple(out)


@cache
def _z(parts: tuple[int, ...]) -> int:
    denom = 1
    for i, m in _mults(parts).items():
        denom *= i**m * math.factorial(m)
    return math.factorial(sum(parts)) // denom


# ---------------------------------------------------------------------------
# domain types


@dataclass(frozen=True)
class IntegerPartition:
    """A partition of a non-negative integer; parts kept non-increasing."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(sorted(self.parts, reverse=True))
        if parts and parts[-1] <= 0:
            raise ValueError(f"parts must be positive: {self.parts!r}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicity(self, i: int) -> int:
        """Number of parts equal to i."""
        return self.parts.count(i)

    def multiplicities(self) -> dict[int, int]:
        return _mults(self.parts)

    def down_arrow(self, part_size: int) -> "IntegerPartition":
        """Shrink one part of the given size (>= 2) by one."""
        if part_size < 2:
            raise ValueError("only parts of size >= 2 can shrink")
        if part_size not in self.parts:
            raise NoSuchPartError(f"no part of size {part_size} in {self}")
        return IntegerPartition(_merge_sorted(_remove_part(self.parts, part_size), (part_size - 1,)))

    @classmethod
    def from_multiplicities(cls, m: dict[int, int]) -> "IntegerPartition":
        parts: list[int] = []
        for i, cnt in m.items():
            parts.extend([i] * cnt)
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "IntegerPartition":
        """Accepts "3+2+1+1", "1^2 2^1 3^1", or "0" for the empty partition."""
        text = text.strip()
        if text == "0" or text == "":
            return cls(())
        if "^" in text:
            parts: list[int] = []
            for token in text.split():
                base, _, exp = token.partition("^")
                parts.extend([int(base)] * int(exp))
            return cls(tuple(parts))
        return cls(tuple(int(tok) for tok in text.split("+")))

    def exponent_form(self) -> str:
        m = self.multiplicities()
        return " ".join(f"{i}^{m[i]}" for i in sorted(m)) if m else "0"

    def __str__(self) -> str:
        return "+".join(str(p) for p in self.parts) if self.parts else "0"


@dataclass(frozen=True)
class Composition:
    """A composition of n: an ordered tuple of positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        if not parts or any(p <= 0 for p in parts):
            raise ValueError(f"composition parts must be positive: {self.parts!r}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def blocks(self) -> tuple[tuple[int, int], ...]:
        """The induced consecutive blocks of [n] as 1-based (start, end) pairs."""
        out = []
        start = 1
        for p in self.parts:
            out.append((start, start + p - 1))
            start += p
        return tuple(out)

    def boundaries(self) -> tuple[int, ...]:
        """Proper prefix sums (excluding n): the cut points between blocks."""
        cuts = []
        acc = 0
        for p in self.parts[:-1]:
            acc += p
            cuts.append(acc)
        return tuple(cuts)

    def decremented(self, i: int) -> "Composition":
        """Shrink block i (1-based) by one element; the block must have >= 2."""
        if not 1 <= i <= self.length:
            raise IndexError(f"block index {i} out of range")
        if self.parts[i - 1] < 2:
            raise ValueError(f"block {i} of {self} cannot shrink below one element")
        return Composition(self.parts[: i - 1] + (self.parts[i - 1] - 1,) + self.parts[i:])

    @classmethod
    def parse(cls, text: str) -> "Composition":
        text = text.strip().lstrip("(").rstrip(")")
        return cls(tuple(int(tok) for tok in text.split(",")))

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class PartitionSequence:
    """One integer partition per block of a composition."""

    alpha: Composition
    components: tuple[IntegerPartition, ...]

    def __post_init__(self) -> None:
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        if len(comps) != self.alpha.length:
            raise ValueError("one partition per composition part is required")
        for lam, size in zip(comps, self.alpha.parts):
            if lam.n != size:
                raise ValueError(f"{lam} is not a partition of block size {size}")

    @property
    def n(self) -> int:
        return self.alpha.n

    @property
    def length(self) -> int:
        return sum(c.length for c in self.components)

    def multiplicity(self, i: int) -> int:
        return sum(c.multiplicity(i) for c in self.components)

    def d_vector(self) -> tuple[int, ...]:
        """Component lengths: how many cycles each block is split into."""
        return tuple(c.length for c in self.components)

    def key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(c.parts for c in self.components)

    def down_arrow(self, i: int, part_size: int) -> "PartitionSequence":
        """Shrink one part of the given size inside component i (1-based)."""
        if not 1 <= i <= len(self.components):
            raise IndexError(f"component index {i} out of range")
        shrunk = self.components[i - 1].down_arrow(part_size)
        comps = self.components[: i - 1] + (shrunk,) + self.components[i:]
        return PartitionSequence(self.alpha.decremented(i), comps)

    @classmethod
    def parse(cls, text: str) -> "PartitionSequence":
        comps = tuple(IntegerPartition.parse(tok) for tok in text.split("|"))
        return cls(Composition(tuple(c.n for c in comps)), comps)

    def __str__(self) -> str:
        return " | ".join(str(c) for c in self.components)


# ---------------------------------------------------------------------------
# enumeration


def partitions(n: int) -> Iterator[IntegerPartition]:
    """All partitions of n, reverse-lexicographic: n^1 first, 1^n last."""
    if n < 0:
        raise ValueError("n must be >= 0")
    for parts in _partition_list(n):
        yield IntegerPartition(parts)


def partition_sequences(alpha: Composition) -> Iterator[PartitionSequence]:
    """All partition sequences over alpha, component orders reverse-lex."""
    lists = [_partition_list(p) for p in alpha.parts]
    idx = [0] * len(lists)
    while True:
        yield PartitionSequence(alpha, tuple(IntegerPartition(lists[i][idx[i]]) for i in range(len(lists))))
        j = len(lists) - 1
        while j >= 0:
            idx[j] += 1
            if idx[j] < len(lists[j]):
                break
            idx[j] = 0
            j -= 1
        if j < 0:
            return


# ---------------------------------------------------------------------------
# conjugacy-class sizes


def z_of(lam: IntegerPartition) -> int:
    """Number of permutations whose cycle lengths are exactly this partition."""
    return _z(lam.parts)


def z_of_seq(seq: PartitionSequence) -> int:
    """Number of block-separated permutations with these per-block cycle types."""
    out = 1
    for c in seq.components:
        out *= _z(c.parts)
    return out


# ---------------------------------------------------------------------------
# merging counts and refinements
#
# kappa(mu, lam, k) counts the k-subsets of the parts of mu whose merger into
# a single part (their sum) turns mu into lam.  Parts are individually
# distinguished: two equal parts count as different choices.


def kappa(mu: IntegerPartition, lam: IntegerPartition, k: int) -> int:
    if mu.n != lam.n:
        raise ValueError("partitions must have the same size")
    if k < 2:
        raise ValueError("merging needs k >= 2")
    return _kappa(mu.parts, lam.parts, k)


@cache
def _kappa(mu_parts: tuple[int, ...], lam_parts: tuple[int, ...], k: int) -> int:
    if len(mu_parts) != len(lam_parts) + k - 1:
        return 0
    mu_m = _mults(mu_parts)
    total = 0
    for v in sorted(set(lam_parts), reverse=True):
        if v < k:
            continue
        base = _remove_part(lam_parts, v)
        for sigma in _partitions_into(v, k):
            if _merge_sorted(base, sigma) == mu_parts:
                ways = 1
                for i, cnt in _mults(sigma).items():
                    ways *= math.comb(mu_m.get(i, 0), cnt)
                total += ways
    return total


@cache
def _refinements(lam_parts: tuple[int, ...], k: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """All (mu, kappa) with mu obtained by splitting one part of lam into k."""
    acc: dict[tuple[int, ...], int] = {}
    for v in sorted(set(lam_parts), reverse=True):
        if v < k:
            continue
        base = _remove_part(lam_parts, v)
        for sigma in _partitions_into(v, k):
            mu = _merge_sorted(base, sigma)
            mu_m = _mults(mu)
            ways = 1
            for i, cnt in _mults(sigma).items():
                ways *= math.comb(mu_m.get(i, 0), cnt)
            acc[mu] = acc.get(mu, 0) + ways
    return tuple(sorted(acc.items(), reverse=True))


def refinement_targets(lam: IntegerPartition, k: int) -> Iterator[tuple[IntegerPartition, int]]:
    """Stream of (mu, kappa) over every mu obtained by splitting one part of
    lam into k parts, reverse-lexicographic in mu."""
    if k < 2:
        raise ValueError("splitting needs k >= 2")
    for mu, kap in _refinements(lam.parts, k):
        yield IntegerPartition(mu), kap


@cache
def _odd_refinements(lam_parts: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Union of _refinements over odd split sizes k = 3, 5, ... (k > 1)."""
    acc: dict[tuple[int, ...], int] = {}
    maxp = lam_parts[0] if lam_parts else 0
    for k in range(3, maxp + 1, 2):
        for mu, kap in _refinements(lam_parts, k):
            acc[mu] = acc.get(mu, 0) + kap
    return tuple(sorted(acc.items(), reverse=True))


def odd_refinements(lam: IntegerPartition) -> Iterator[tuple[IntegerPartition, int]]:
    """All (mu, kappa) with mu a split of one part of lam into an odd number
    (at least 3) of parts."""
    for mu, kap in _odd_refinements(lam.parts):
        yield IntegerPartition(mu), kap


@cache
def _odd_refinements_seq(
    seq_key: tuple[tuple[int, ...], ...],
) -> tuple[tuple[int, tuple[tuple[int, ...], ...], int], ...]:
    """Component-wise odd splits of a partition sequence.

    Yields (component index 0-based, new sequence key, kappa); the merging
    count of a sequence pair equals that of the one component they differ in.
    """
    out = []
    for i, comp in enumerate(seq_key):
        for mu, kap in _odd_refinements(comp):
            out.append((i, seq_key[:i] + (mu,) + seq_key[i + 1 :], kap))
    return tuple(out)


def refinement_targets_seq(seq: PartitionSequence, k: int) -> Iterator[tuple[PartitionSequence, int]]:
    """Sequence analogue of refinement_targets: the split happens inside a
    single component; all other components are carried over unchanged."""
    if k < 2:
        raise ValueError("splitting needs k >= 2")
    for i, comp in enumerate(seq.components):
        for mu, kap in _refinements(comp.parts, k):
            comps = seq.components[:i] + (IntegerPartition(mu),) + seq.components[i + 1 :]
            yield PartitionSequence(seq.alpha, comps), kap


def odd_refinements_seq(seq: PartitionSequence) -> Iterator[tuple[PartitionSequence, int]]:
    for i, key, kap in _odd_refinements_seq(seq.key()):
        comps = tuple(IntegerPartition(parts) for parts in key)
        yield PartitionSequence(seq.alpha, comps), kap


def lambda_coeff(seq: PartitionSequence, i: int, j: int) -> Fraction:
    """Weight attached to shrinking a (j+1)-part of component i (1-based):
    (alpha_i / 2) * j * m_j of the shrunk component."""
    shrunk = seq.components[i - 1].down_arrow(j + 1)
    return Fraction(seq.alpha.parts[i - 1], 2) * j * shrunk.multiplicity(j)


# ---------------------------------------------------------------------------
# Stirling-type numbers and factorial helpers


@cache
def stirling_first(n: int, k: int) -> int:
    """Signless Stirling number of the first kind: permutations of [n] with
    k cycles.  C(n,k) = C(n-1,k-1) + (n-1) C(n-1,k), C(0,0) = 1."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be >= 0")
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    return stirling_first(n - 1, k - 1) + (n - 1) * stirling_first(n - 1, k)


@cache
def separated_stirling(n: int, m: int, k: int) -> int:
    """Permutations of [n] with k cycles and 1..m in pairwise distinct cycles.

    Insertion recurrence (certified against brute force in the tests):
    C_m(n,k) = C_m(n-1,k-1) + (n-1) C_m(n-1,k) for n > m, C_m(m,k) = [k == m].
    """
    if not 0 <= m <= n:
        raise ValueError("need n >= m >= 0")
    if k < 0 or k > n:
        return 0
    if n == m:
        return 1 if k == m else 0
    return separated_stirling(n - 1, m, k - 1) + (n - 1) * separated_stirling(n - 1, m, k)


def falling_factorial(x: int, m: int) -> int:
    """(x)_m = x (x-1) ... (x-m+1), with (x)_0 = 1."""
    if m < 0:
        raise ValueError("m must be >= 0")
    out = 1
    for t in range(m):
        out *= x - t
    return out


def binomial(a: int, b: int) -> int:
    """Binomial coefficient; zero when b > a >= 0."""
    if b < 0 or a < 0:
        raise ValueError("binomial arguments must be >= 0")
    return math.comb(a, b)

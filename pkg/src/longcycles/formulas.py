"""Closed-form counts for products of two long cycles, all in exact
arithmetic.

Every function returns an exact integer (or Fraction for expectations and
probabilities).  Counts of products of two n-cycles are guarded by parity:
such a product is always an even permutation, so a query for an infeasible
cycle count returns 0 instead of evaluating an expression that is only valid
under the feasibility hypothesis.  The unguarded ``*_raw`` variants exist so
the verification suite can report what the bare expressions evaluate to on
infeasible input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from typing import Mapping, Sequence

from .errors import DimensionMismatchError, DomainError, ExactnessError
from .partitions import (
    Composition,
    IntegerPartition,
    binomial,
    falling_factorial,
    separated_stirling,
    stirling_first,
    z_of,
)

__all__ = [
    "zagier_stanley",
    "hultman_expected",
    "boccara",
    "even_factorization_count",
    "separating_total",
    "separating_by_d",
    "separated_pairs_by_count",
    "separation_probability",
    "pairs_by_type",
    "CountQuery",
    "evaluate",
]


def _exact_int(value: Fraction, context: str) -> int:
    if value.denominator != 1:
        raise ExactnessError(f"{context} evaluated to non-integer {value}")
    return value.numerator


# ---------------------------------------------------------------------------
# counts by cycle count / cycle type


def zagier_stanley_raw(n: int, k: int) -> Fraction:
    return Fraction(2 * stirling_first(n + 1, k), n * (n + 1))


def zagier_stanley(n: int, k: int) -> int:
    """Long cycles s on [n] such that (1 2 ... n)∘s has exactly k cycles:
    2 C(n+1, k) / (n (n+1)), and 0 whenever k and n have different parity
    (the product of two long cycles is even)."""
    if n < 1 or not 1 <= k <= n:
        raise ValueError("need n >= 1 and 1 <= k <= n")
    if (n - k) % 2:
        return 0
    return _exact_int(zagier_stanley_raw(n, k), f"zagier_stanley({n},{k})")


def hultman_expected(n: int, k: int) -> Fraction:
    """Expected number of k-cycles in the product of two independent uniform
    long cycles on [n]: (-1)^(k+1) / (k binom(n-1,k)) + 1/k."""
    if k < 1 or n < 1:
        raise DomainError("need n, k >= 1")
    b = math.comb(n - 1, k)
    if b == 0:
        raise DomainError(f"binom({n - 1},{k}) vanishes; expectation formula undefined")
    return Fraction((-1) ** (k + 1), k * b) + Fraction(1, k)


def boccara(n: int, k: int) -> int:
    """Ordered factorizations of a fixed even permutation of cycle type
    (k, n-k) into two n-cycles: (2 (n-1)! / (n+1)) (1 - (-1)^k / binom(n,k))."""
    if not 1 <= k < n:
        raise ValueError("need 1 <= k < n")
    if n % 2:
        raise DomainError(f"a permutation with two cycles on [{n}] is odd")
    value = Fraction(2 * math.factorial(n - 1), n + 1) * (1 - Fraction((-1) ** k, math.comb(n, k)))
    return _exact_int(value, f"boccara({n},{k})")


def even_factorization_count(lam: IntegerPartition) -> int:
    """Ordered factorizations of a fixed even permutation of the given cycle
    type into two long cycles.

    With parts lam = (l1 >= l2 >= ... >= lk), the count is
    2 (n-1)! * sum over j_2..j_k (0 <= j_t < l_t, sum = L) of
    (-1)^L L! / (l1+L+1)_(L+1) * prod binom(l_t, j_t),
    the falling factorial in the denominator.
    """
    parts = lam.parts
    n = lam.n
    if n < 1:
        raise ValueError("need a partition of n >= 1")
    if (n - lam.length) % 2:
        raise DomainError(f"a permutation of type {lam} on [{n}] is odd")
    head = parts[0]
    acc = Fraction(0)
    ranges = [range(p) for p in parts[1:]]
    for js in _product(ranges):
        total = sum(js)
        term = Fraction((-1) ** total * math.factorial(total), falling_factorial(head + total + 1, total + 1))
        for p, j in zip(parts[1:], js):
            term *= binomial(p, j)
        acc += term
    value = 2 * math.factorial(n - 1) * acc
    return _exact_int(value, f"even_factorization_count({lam})")


def _product(ranges: list[range]):
    if not ranges:
        yield ()
        return
    for head in ranges[0]:
        for rest in _product(ranges[1:]):
            yield (head,) + rest


def pairs_by_type(lam: IntegerPartition) -> int:
    """Ordered pairs of long cycles whose product has the given cycle type:
    z_type * (factorizations of one fixed representative); 0 when the type
    has infeasible parity."""
    if (lam.n - lam.length) % 2:
        return 0
    return z_of(lam) * even_factorization_count(lam)


# ---------------------------------------------------------------------------
# block separation


def separating_total(alpha: Composition) -> int:
    """Ordered pairs of long cycles whose product keeps every block of alpha
    together: (n-1)! / (n+1-k) * prod alpha_t!."""
    n, k = alpha.n, alpha.length
    value = Fraction(math.factorial(n - 1), n + 1 - k)
    for p in alpha.parts:
        value *= math.factorial(p)
    return _exact_int(value, f"separating_total({alpha})")


@cache
def _sep_by_d(gamma: tuple[int, ...], d: tuple[int, ...]) -> Fraction:
    """Block-count refined separation count, expanded by repeatedly moving
    one element from a later block onto the first block.

    Satisfies binom(g1+1,2) G(gamma) + sum_j binom(g_j,2) G(gamma^(j)) = Y,
    where gamma^(j) moves one element from block j to block 1 and
    Y = (n-1)! C(g1+1, d1) prod_{t>1} C(g_t, d_t).  Terms vanish once a block
    empties because both the Stirling factor and binom(1,2) are zero.
    """
    n = sum(gamma)
    y = math.factorial(n - 1) * stirling_first(gamma[0] + 1, d[0])
    for g, di in zip(gamma[1:], d[1:]):
        y *= stirling_first(g, di)
    acc = Fraction(y)
    for j in range(1, len(gamma)):
        if gamma[j] >= 2:
            moved = (gamma[0] + 1,) + gamma[1:j] + (gamma[j] - 1,) + gamma[j + 1 :]
            acc -= math.comb(gamma[j], 2) * _sep_by_d(moved, d)
    return acc / math.comb(gamma[0] + 1, 2)


def _check_d(alpha: Composition, d: Sequence[int]) -> tuple[int, ...]:
    d = tuple(d)
    if len(d) != alpha.length:
        raise DimensionMismatchError(f"d has {len(d)} entries for {alpha.length} blocks")
    if any(di < 1 for di in d):
        raise ValueError("every d_i must be >= 1")
    return d


def separating_by_d_raw(alpha: Composition, d: Sequence[int]) -> Fraction:
    return _sep_by_d(alpha.parts, _check_d(alpha, d))


def separating_by_d(alpha: Composition, d: Sequence[int]) -> int:
    """Ordered pairs of long cycles whose product keeps every block of alpha
    together and splits block i into exactly d_i cycles.

    Returns 0 immediately when sum(d) and n differ in parity: the expansion
    is only valid under that hypothesis and would otherwise produce a
    nonzero value for a count that is genuinely zero.
    """
    d = _check_d(alpha, d)
    if (sum(d) - alpha.n) % 2:
        return 0
    return _exact_int(_sep_by_d(alpha.parts, d), f"separating_by_d({alpha},{d})")


def separated_pairs_by_count_raw(n: int, m: int, k: int) -> Fraction:
    return Fraction(
        2 * math.factorial(n - 1) * separated_stirling(n + 1, m, k),
        (n + m) * (n + 1 - m),
    )


def separated_pairs_by_count(n: int, m: int, k: int) -> int:
    """Ordered pairs of long cycles on [n] whose product has k cycles with
    1..m in pairwise distinct cycles:
    2 (n-1)! C_m(n+1, k) / ((n+m)(n+1-m)), and 0 for infeasible parity."""
    if not 1 <= m <= n or not 1 <= k <= n:
        raise ValueError("need 1 <= m <= n and 1 <= k <= n")
    if (n - k) % 2:
        return 0
    return _exact_int(separated_pairs_by_count_raw(n, m, k), f"separated_pairs_by_count({n},{m},{k})")


def separation_probability(n: int, m: int) -> Fraction:
    """Probability that the product of two independent uniform long cycles on
    [n] has 1..m in pairwise distinct cycles: 1/m! when n-m is odd, plus
    2/((m-2)! (n+1-m)(n+m)) when n-m is even."""
    if not 2 <= m <= n:
        raise ValueError("need 2 <= m <= n")
    base = Fraction(1, math.factorial(m))
    if (n - m) % 2:
        return base
    return base + Fraction(2, math.factorial(m - 2) * (n + 1 - m) * (n + m))


# ---------------------------------------------------------------------------
# query objects (the JSON surface of the CLI)

_KINDS = {
    "by_cycle_count": ("k",),
    "by_cycle_type": ("lam",),
    "separated_by_alpha_d": ("alpha", "d"),
    "separated_total": ("alpha",),
    "factorization_of_type": ("lam",),
    "expected_k_cycles": ("k",),
    "separation_probability_m": ("m",),
    "separated_by_m_and_count": ("m", "k"),
}


@dataclass(frozen=True)
class CountQuery:
    """A well-formed query against the closed forms, serializable to JSON."""

    n: int
    kind: str
    params: Mapping[str, object] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown query kind {self.kind!r}")
        missing = [name for name in _KINDS[self.kind] if name not in self.params]
        if missing:
            raise ValueError(f"{self.kind} query needs parameters {missing}")

    def to_dict(self) -> dict:
        params = {}
        for key, val in self.params.items():
            if isinstance(val, (IntegerPartition, Composition)):
                params[key] = str(val)
            elif isinstance(val, tuple):
                params[key] = list(val)
            else:
                params[key] = val
        return {"n": self.n, "kind": self.kind, "params": params}


def evaluate(query: CountQuery) -> int | Fraction:
    n, p = query.n, query.params
    if query.kind == "by_cycle_count":
        return zagier_stanley(n, p["k"])
    if query.kind == "by_cycle_type":
        return pairs_by_type(p["lam"])
    if query.kind == "separated_by_alpha_d":
        return separating_by_d(p["alpha"], p["d"])
    if query.kind == "separated_total":
        return separating_total(p["alpha"])
    if query.kind == "factorization_of_type":
        return even_factorization_count(p["lam"])
    if query.kind == "expected_k_cycles":
        return hultman_expected(n, p["k"])
    if query.kind == "separation_probability_m":
        return separation_probability(n, p["m"])
    if query.kind == "separated_by_m_and_count":
        return separated_pairs_by_count(n, p["m"], p["k"])
    raise AssertionError(query.kind)

"""Machine verification of every counting identity in the package.

Each identity is checked over exhaustively enumerated instances at desk
scale, with both sides evaluated in exact arithmetic; a report passes only on
exact equality.  Counts of plane permutations come from the brute-force
sweeps in :mod:`longcycles.oracle` (optionally from the closed forms, where a
closed form exists), so the identity suites double as end-to-end certificates
for the oracle, the partition algebra, and the formulas at once.

Identity names used in reports:

- ``split_exceedance`` / ``split_exceedance_dual``: the exceedance-weighted
  cycle-splitting recurrences for a fixed diagonal cycle type;
- ``split_joint`` / ``split_long``: the recurrences with the exceedance
  parameter cleared, the latter specialized to a long-cycle diagonal;
- ``*_sep`` variants: the same recurrences refined by block types;
- ``total_exceedance_balance`` / ``total_exceedance_count``: the total number
  of exceedances over all diagonals, computed two ways;
- ``length_weight_base``: the pure partition-algebra recurrence that the
  weighted sums below are measured against;
- ``downarrow_step`` / ``downarrow_exchange`` / ``weighted_sum_recurrence`` /
  ``weighted_sum_value``: the part-shrinking weighted sums and their closed
  evaluation;
- ``block_deletion_d`` / ``block_deletion_total``: the block-deletion
  identities tying refined separation counts to Stirling products;
- ``formula:*``: closed form versus brute-force oracle;
- ``plane:*``: structural sweeps over two-row arrays.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Iterator, Sequence

from . import formulas, oracle
from .partitions import (
    Composition,
    IntegerPartition,
    _odd_refinements,
    _odd_refinements_seq,
    _partition_list,
    _z,
    stirling_first,
)
from .permutations import Permutation, canonical_of_type, compose, long_cycle_iter
from .plane import _classify, _diagonal_from_pairs, _transpose

__all__ = [
    "IdentityReport",
    "ParityAuditRecord",
    "VerifyRun",
    "SUITES",
    "run_suites",
    "classic_reports",
    "section3_reports",
    "baserecur_reports",
    "formula_vs_oracle_reports",
    "plane_structure_reports",
    "parity_audit",
]


def _display(value: int | Fraction) -> str:
    if isinstance(value, Fraction) and value.denominator == 1:
        value = value.numerator
    return str(value)


@dataclass
class IdentityReport:
    identity: str
    instance: str
    lhs: int | Fraction
    rhs: int | Fraction

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "instance": self.instance,
            "lhs": _display(self.lhs),
            "rhs": _display(self.rhs),
            "pass": self.passed,
        }

    def __str__(self) -> str:
        mark = "ok" if self.passed else "FAIL"
        return f"[{mark}] {self.identity} @ {self.instance}: {_display(self.lhs)} vs {_display(self.rhs)}"


@dataclass
class ParityAuditRecord:
    """A wrong-parity instance: the bare expression's value next to the true
    count, which must be zero."""

    identity: str
    instance: str
    formula_value: int | Fraction
    true_count: int

    @property
    def ok(self) -> bool:
        return self.true_count == 0

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "instance": self.instance,
            "formula_value": _display(self.formula_value),
            "true_count": str(self.true_count),
            "ok": self.ok,
        }

    def __str__(self) -> str:
        mark = "ok" if self.ok else "FAIL"
        return (
            f"[{mark}] parity violation {self.identity} @ {self.instance}: "
            f"expression gives {_display(self.formula_value)}, true count {self.true_count}"
        )


# ---------------------------------------------------------------------------
# cached accessors over the oracle (tuple keys throughout)

SeqKey = tuple[tuple[int, ...], ...]


def _p_type(n: int, lam: tuple[int, ...], source: str = "oracle") -> int:
    """Ordered pairs of long cycles whose product has cycle type lam."""
    if source == "formula":
        return formulas.pairs_by_type(IntegerPartition(lam))
    oracle.product_pair_counts(n)
    return oracle._pairs_by_type(n).get(lam, 0)


def _p_seq(n: int, alpha_parts: tuple[int, ...], key: SeqKey) -> int:
    """Ordered pairs whose product is alpha-separated with the given block types."""
    oracle.product_pair_counts(n)
    return oracle._pairs_alpha_tables(n, alpha_parts)[1].get(key, 0)


def _p_d(n: int, alpha_parts: tuple[int, ...], d: tuple[int, ...]) -> int:
    oracle.product_pair_counts(n)
    return oracle._pairs_alpha_tables(n, alpha_parts)[0].get(d, 0)


def _p_sep_total(n: int, alpha_parts: tuple[int, ...]) -> int:
    oracle.product_pair_counts(n)
    return oracle._pairs_alpha_tables(n, alpha_parts)[2]


def _plane_type(n: int):
    """p^eta_lam and p^eta_(lam,a) tables over all diagonals of each type."""
    oracle.product_pair_counts(n)
    return oracle._plane_type_tallies(n)


def _plane_seq(n: int, alpha_parts: tuple[int, ...]):
    """p^eta_Lam and p^eta_(Lam,a) tables over all diagonals of each type."""
    return oracle._plane_seq_tallies(n, alpha_parts)


# ---------------------------------------------------------------------------
# small algebra helpers on tuple keys


def _seq_len(key: SeqKey) -> int:
    return sum(len(c) for c in key)


def _seq_z(key: SeqKey) -> int:
    out = 1
    for c in key:
        out *= _z(c)
    return out


def _seq_m(key: SeqKey, i: int) -> int:
    return sum(c.count(i) for c in key)


def _down(parts: tuple[int, ...], size: int) -> tuple[int, ...]:
    idx = parts.index(size)
    return tuple(sorted(parts[:idx] + parts[idx + 1 :] + (size - 1,), reverse=True))


def _compositions(n: int) -> tuple[tuple[int, ...], ...]:
    out = []
    for cuts in itertools.product([False, True], repeat=n - 1):
        parts = []
        size = 1
        for cut in cuts:
            if cut:
                parts.append(size)
                size = 1
            else:
                size += 1
        parts.append(size)
        out.append(tuple(parts))
    return tuple(out)


def _seq_keys(alpha_parts: tuple[int, ...]) -> Iterator[SeqKey]:
    for combo in itertools.product(*(_partition_list(p) for p in alpha_parts)):
        yield combo


def _weight_sum(key: SeqKey) -> int:
    """sum over i >= 1 of (i+1) * m_{i+1}: the total size of parts >= 2."""
    return sum(p for c in key for p in c if p >= 2)


def _T(n: int, alpha_parts: tuple[int, ...], key: SeqKey) -> Fraction:
    """The part-shrinking weighted sum over pair counts one level down."""
    total = Fraction(0)
    for i0, comp in enumerate(key):
        for part in sorted(set(comp), reverse=True):
            if part < 2:
                continue
            shrunk = _down(comp, part)
            coeff = Fraction(alpha_parts[i0], 2) * (part - 1) * shrunk.count(part - 1)
            a2 = alpha_parts[:i0] + (alpha_parts[i0] - 1,) + alpha_parts[i0 + 1 :]
            total += coeff * _p_seq(n, a2, key[:i0] + (shrunk,) + key[i0 + 1 :])
    return total


def _fmt_seq(key: SeqKey) -> str:
    return oracle.format_seq_key(key)


def _fmt_type(parts: tuple[int, ...]) -> str:
    return oracle.format_type_key(parts)


def _fmt_comp(parts: tuple[int, ...]) -> str:
    return "(" + ",".join(str(p) for p in parts) + ")"


# ---------------------------------------------------------------------------
# classic suite: identities for a fixed diagonal cycle type


def classic_reports(max_n: int = 6, p_source: str = "oracle") -> list[IdentityReport]:
    reports: list[IdentityReport] = []
    for n in range(2, max_n + 1):
        etas = _partition_list(n)
        p_eta, p_eta_a = _plane_type(n)
        for eta in etas:
            for lam in etas:
                inst = f"n={n} eta={_fmt_type(eta)} lam={_fmt_type(lam)}"
                refs = _odd_refinements(lam)
                # exceedance-weighted split recurrence
                lhs = sum(
                    (n - len(lam) - a) * cnt
                    for (t, a), cnt in p_eta_a[eta].items()
                    if t == lam
                )
                rhs = sum(kap * p_eta[eta].get(mu, 0) for mu, kap in refs)
                reports.append(IdentityReport("split_exceedance", inst, lhs, rhs))
                # the same recurrence with the roles of the two types swapped
                lhs_dual = sum(
                    (n - len(eta) - a) * cnt
                    for (t, a), cnt in p_eta_a[lam].items()
                    if t == eta
                )
                rhs_dual = sum(kap * p_eta[lam].get(mu, 0) for mu, kap in _odd_refinements(eta))
                reports.append(IdentityReport("split_exceedance_dual", inst, lhs_dual, rhs_dual))
                # joint form: both sides with the exceedance parameter cleared
                lhs_joint = (n + 1 - len(lam) - len(eta)) * p_eta[eta].get(lam, 0)
                rhs_joint = sum(kap * p_eta[eta].get(mu, 0) for mu, kap in refs)
                rhs_joint += sum(
                    kap * p_eta[mu].get(lam, 0) for mu, kap in _odd_refinements(eta)
                )
                reports.append(IdentityReport("split_joint", inst, lhs_joint, rhs_joint))
        # long-cycle diagonal specialization, under its parity hypothesis
        for lam in etas:
            if (len(lam) - n) % 2:
                continue
            inst = f"n={n} lam={_fmt_type(lam)}"
            lhs = (n + 1 - len(lam)) * _p_type(n, lam, p_source)
            rhs = sum(kap * _p_type(n, mu, p_source) for mu, kap in _odd_refinements(lam))
            rhs += math.factorial(n - 1) * _z(lam)
            reports.append(IdentityReport("split_long", inst, lhs, rhs))
    return reports


# ---------------------------------------------------------------------------
# block-refined suite


def _alpha_instances(n: int) -> Iterator[tuple[tuple[int, ...], SeqKey]]:
    for alpha_parts in _compositions(n):
        for key in _seq_keys(alpha_parts):
            yield alpha_parts, key


def section3_reports(max_n: int = 6) -> list[IdentityReport]:
    reports: list[IdentityReport] = []
    for n in range(2, max_n + 1):
        etas = _partition_list(n)
        fact_n1 = math.factorial(n - 1)
        # identities over block types of products on [n]
        for alpha_parts, key in _alpha_instances(n):
            base = f"n={n} alpha={_fmt_comp(alpha_parts)} Lam={_fmt_seq(key)}"
            refs = _odd_refinements_seq(key)
            z_key = _seq_z(key)
            p_eta_seq, p_eta_seq_a = _plane_seq(n, alpha_parts)
            # block-refined split with exceedance weights, per diagonal type
            for eta in etas:
                inst = f"{base} eta={_fmt_type(eta)}"
                lhs = sum(
                    (n - _seq_len(key) - a) * cnt
                    for (k2, a), cnt in p_eta_seq_a[eta].items()
                    if k2 == key
                )
                rhs = sum(kap * p_eta_seq[eta].get(k2, 0) for _i, k2, kap in refs)
                reports.append(IdentityReport("split_exceedance_sep", inst, lhs, rhs))
                lhs_joint = (n + 1 - _seq_len(key) - len(eta)) * p_eta_seq[eta].get(key, 0)
                rhs_joint = sum(kap * p_eta_seq[eta].get(k2, 0) for _i, k2, kap in refs)
                rhs_joint += sum(
                    kap * p_eta_seq[mu].get(key, 0) for mu, kap in _odd_refinements(eta)
                )
                reports.append(IdentityReport("split_joint_sep", inst, lhs_joint, rhs_joint))
            # long-cycle diagonal specialization (parity hypothesis)
            if (_seq_len(key) - n) % 2 == 0:
                lhs = (n + 1 - _seq_len(key)) * _p_seq(n, alpha_parts, key)
                rhs = sum(kap * _p_seq(n, alpha_parts, k2) for _i, k2, kap in refs)
                rhs += fact_n1 * z_key
                reports.append(IdentityReport("split_long_sep", base, lhs, rhs))
            # total exceedances over all diagonals, two evaluations
            total_exc = sum(
                a * cnt
                for eta in etas
                for (k2, a), cnt in p_eta_seq_a[eta].items()
                if k2 == key
            )
            balance = (n - _seq_len(key)) * fact_n1 * z_key
            balance -= fact_n1 * sum(kap * _seq_z(k2) for _i, k2, kap in refs)
            reports.append(IdentityReport("total_exceedance_balance", base, total_exc, balance))
            direct = Fraction(n - _seq_m(key, 1), 2) * fact_n1 * z_key
            reports.append(IdentityReport("total_exceedance_count", base, Fraction(total_exc), direct))
        # weighted part-shrinking identities: block types one element up
        for alpha_parts, key in _alpha_instances(n + 1):
            base = f"n={n} alpha={_fmt_comp(alpha_parts)} Lam={_fmt_seq(key)}"
            refs = _odd_refinements_seq(key)
            z_key = _seq_z(key)
            right_parity = (_seq_len(key) - n) % 2 == 0
            if right_parity:
                for i0, comp in enumerate(key):
                    for part in sorted(set(comp), reverse=True):
                        if part < 2:
                            continue
                        shrunk = _down(comp, part)
                        coeff = Fraction(alpha_parts[i0], 2) * (part - 1) * shrunk.count(part - 1)
                        a2 = alpha_parts[:i0] + (alpha_parts[i0] - 1,) + alpha_parts[i0 + 1 :]
                        key2 = key[:i0] + (shrunk,) + key[i0 + 1 :]
                        inst = f"{base} i={i0 + 1} j={part - 1}"
                        lhs = (n + 1 - _seq_len(key)) * coeff * _p_seq(n, a2, key2)
                        rhs = coeff * sum(
                            kap * _p_seq(n, a2, k3)
                            for _t, k3, kap in _odd_refinements_seq(key2)
                        )
                        rhs += Fraction(part * comp.count(part), 2) * fact_n1 * z_key
                        reports.append(IdentityReport("downarrow_step", inst, lhs, rhs))
                lhs_rec = (n + 1 - _seq_len(key)) * _T(n, alpha_parts, key)
                rhs_rec = sum(kap * _T(n, alpha_parts, k2) for _i, k2, kap in refs)
                rhs_rec += Fraction(fact_n1 * z_key, 2) * _weight_sum(key)
                reports.append(IdentityReport("weighted_sum_recurrence", base, lhs_rec, rhs_rec))
                reports.append(
                    IdentityReport(
                        "weighted_sum_value", base, _T(n, alpha_parts, key), Fraction(fact_n1 * z_key)
                    )
                )
            # the exchange identity holds without the parity hypothesis
            lhs_ex = Fraction(0)
            for i0, comp in enumerate(key):
                for part in sorted(set(comp), reverse=True):
                    if part < 2:
                        continue
                    shrunk = _down(comp, part)
                    coeff = Fraction(alpha_parts[i0], 2) * (part - 1) * shrunk.count(part - 1)
                    a2 = alpha_parts[:i0] + (alpha_parts[i0] - 1,) + alpha_parts[i0 + 1 :]
                    key2 = key[:i0] + (shrunk,) + key[i0 + 1 :]
                    lhs_ex += coeff * sum(
                        kap * _p_seq(n, a2, k3) for _t, k3, kap in _odd_refinements_seq(key2)
                    )
            rhs_ex = sum(kap * _T(n, alpha_parts, k2) for _i, k2, kap in refs)
            reports.append(IdentityReport("downarrow_exchange", base, lhs_ex, Fraction(rhs_ex)))
        reports += block_deletion_reports(n)
    return reports


def block_deletion_reports(n: int) -> list[IdentityReport]:
    """The block-deletion identities at size n, the refined one certified from
    both the oracle's tables and the closed form.

    The d-summed form needs a block of size >= 2: with every block a
    singleton there is no d of the right parity, and the closed right side no
    longer applies.
    """
    reports: list[IdentityReport] = []
    fact_n1 = math.factorial(n - 1)
    for beta in _compositions(n + 1):
        inst_total = f"n={n} beta={_fmt_comp(beta)}"
        if max(beta) >= 2:
            lhs_tot = 0
            for i0, b in enumerate(beta):
                if b < 2:
                    continue
                b2 = beta[:i0] + (b - 1,) + beta[i0 + 1 :]
                lhs_tot += math.comb(b, 2) * _p_sep_total(n, b2)
            rhs_tot = Fraction(fact_n1, 2)
            for b in beta:
                rhs_tot *= math.factorial(b)
            reports.append(
                IdentityReport("block_deletion_total", inst_total, Fraction(lhs_tot), rhs_tot)
            )
        for d in itertools.product(*(range(1, b + 1) for b in beta)):
            if (sum(d) - n) % 2:
                continue
            inst = f"{inst_total} d={_fmt_comp(d)}"
            rhs = fact_n1
            for b, di in zip(beta, d):
                rhs *= stirling_first(b, di)
            for source in ("oracle", "formula"):
                lhs = 0
                for i0, b in enumerate(beta):
                    if b < 2:
                        continue
                    b2 = beta[:i0] + (b - 1,) + beta[i0 + 1 :]
                    if source == "oracle":
                        lhs += math.comb(b, 2) * _p_d(n, b2, d)
                    else:
                        lhs += math.comb(b, 2) * formulas.separating_by_d(Composition(b2), d)
                reports.append(IdentityReport(f"block_deletion_d[{source}]", inst, lhs, rhs))
    return reports


# ---------------------------------------------------------------------------
# pure partition algebra


def baserecur_reports(max_n: int = 12) -> list[IdentityReport]:
    """The length-weight recurrence over all block types of all compositions,
    oracle-free: both sides are partition algebra."""
    reports: list[IdentityReport] = []
    for total in range(1, max_n + 1):
        for alpha_parts, key in _alpha_instances(total):
            z_key = _seq_z(key)
            lhs = (total - _seq_len(key)) * z_key
            rhs = sum(kap * _seq_z(k2) for _i, k2, kap in _odd_refinements_seq(key))
            rhs += Fraction(z_key, 2) * _weight_sum(key)
            inst = f"N={total} alpha={_fmt_comp(alpha_parts)} Lam={_fmt_seq(key)}"
            reports.append(IdentityReport("length_weight_base", inst, Fraction(lhs), rhs))
    return reports


# ---------------------------------------------------------------------------
# closed forms versus the brute-force oracle


@cache
def _zagier_oracle(n: int) -> dict[int, int]:
    """#{long cycles s : (1 2 ... n) ∘ s has k cycles}, by direct enumeration."""
    c = Permutation.from_cycle_word(tuple(range(1, n + 1)))
    table: dict[int, int] = {}
    for s in long_cycle_iter(n):
        k = compose(c, s).cycle_count
        table[k] = table.get(k, 0) + 1
    return table


def formula_vs_oracle_reports(max_n: int = 7, workers: int = 1) -> list[IdentityReport]:
    reports: list[IdentityReport] = []
    for n in range(1, max_n + 1):
        oracle.product_pair_counts(n, workers)
        fact_sq = math.factorial(n - 1) ** 2
        for k in range(1, n + 1):
            reports.append(
                IdentityReport(
                    "formula:by_cycle_count",
                    f"n={n} k={k}",
                    formulas.zagier_stanley(n, k),
                    _zagier_oracle(n).get(k, 0),
                )
            )
        for k in range(1, n):
            reports.append(
                IdentityReport(
                    "formula:expected_k_cycles",
                    f"n={n} k={k}",
                    formulas.hultman_expected(n, k),
                    oracle.expected_k_cycles(n, k),
                )
            )
        if n % 2 == 0:
            for k in range(1, n):
                target = canonical_of_type(IntegerPartition((max(k, n - k), min(k, n - k))))
                reports.append(
                    IdentityReport(
                        "formula:two_cycle_factorizations",
                        f"n={n} k={k}",
                        formulas.boccara(n, k),
                        oracle.count_factorizations(target),
                    )
                )
        for lam_parts in _partition_list(n):
            if (n - len(lam_parts)) % 2:
                continue
            lam = IntegerPartition(lam_parts)
            efc = formulas.even_factorization_count(lam)
            reports.append(
                IdentityReport(
                    "formula:factorization_of_type",
                    f"n={n} lam={_fmt_type(lam_parts)}",
                    efc,
                    oracle.count_factorizations(canonical_of_type(lam)),
                )
            )
            reports.append(
                IdentityReport(
                    "formula:by_cycle_type",
                    f"n={n} lam={_fmt_type(lam_parts)}",
                    formulas.pairs_by_type(lam),
                    _p_type(n, lam_parts),
                )
            )
        for alpha_parts in _compositions(n):
            alpha = Composition(alpha_parts)
            reports.append(
                IdentityReport(
                    "formula:separated_total",
                    f"n={n} alpha={_fmt_comp(alpha_parts)}",
                    formulas.separating_total(alpha),
                    _p_sep_total(n, alpha_parts),
                )
            )
            for d in itertools.product(*(range(1, p + 1) for p in alpha_parts)):
                reports.append(
                    IdentityReport(
                        "formula:separated_by_alpha_d",
                        f"n={n} alpha={_fmt_comp(alpha_parts)} d={_fmt_comp(d)}",
                        formulas.separating_by_d(alpha, d),
                        _p_d(n, alpha_parts, d),
                    )
                )
        for m in range(1, n + 1):
            for k in range(1, n + 1):
                reports.append(
                    IdentityReport(
                        "formula:separated_by_m_and_count",
                        f"n={n} m={m} k={k}",
                        formulas.separated_pairs_by_count(n, m, k),
                        oracle.pairs_separating_prefix(n, m, k),
                    )
                )
        for m in range(2, n + 1):
            true_sep = sum(oracle.pairs_separating_prefix(n, m, k) for k in range(1, n + 1))
            reports.append(
                IdentityReport(
                    "formula:separation_probability",
                    f"n={n} m={m}",
                    formulas.separation_probability(n, m),
                    Fraction(true_sep, fact_sq),
                )
            )
    return reports


# ---------------------------------------------------------------------------
# parity audit: what the bare expressions produce on infeasible input


def parity_audit(max_n: int = 6) -> list[ParityAuditRecord]:
    records: list[ParityAuditRecord] = []
    for n in range(2, max_n + 1):
        oracle.product_pair_counts(n)
        for k in range(1, n + 1):
            if (n - k) % 2 == 0:
                continue
            records.append(
                ParityAuditRecord(
                    "by_cycle_count",
                    f"n={n} k={k}",
                    formulas.zagier_stanley_raw(n, k),
                    _zagier_oracle(n).get(k, 0),
                )
            )
            for m in range(1, n + 1):
                records.append(
                    ParityAuditRecord(
                        "separated_by_m_and_count",
                        f"n={n} m={m} k={k}",
                        formulas.separated_pairs_by_count_raw(n, m, k),
                        oracle.pairs_separating_prefix(n, m, k),
                    )
                )
        for alpha_parts in _compositions(n):
            alpha = Composition(alpha_parts)
            for d in itertools.product(*(range(1, p + 1) for p in alpha_parts)):
                if (sum(d) - n) % 2 == 0:
                    continue
                records.append(
                    ParityAuditRecord(
                        "separated_by_alpha_d",
                        f"n={n} alpha={_fmt_comp(alpha_parts)} d={_fmt_comp(d)}",
                        formulas.separating_by_d_raw(alpha, d),
                        _p_d(n, alpha_parts, d),
                    )
                )
    return records


# ---------------------------------------------------------------------------
# structural sweeps over two-row arrays


def _words(n: int) -> list[tuple[int, ...]]:
    return [(1,) + tail for tail in itertools.permutations(range(2, n + 1))]


def _cycle_count_img(img: tuple[int, ...]) -> int:
    n = len(img)
    seen = [False] * (n + 1)
    count = 0
    for start in range(1, n + 1):
        if seen[start]:
            continue
        count += 1
        x = start
        while not seen[x]:
            seen[x] = True
            x = img[x - 1]
    return count


def _inverse_img(img: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(img)
    for i, v in enumerate(img):
        inv[v - 1] = i + 1
    return tuple(inv)


def _word_to_img(word: tuple[int, ...]) -> tuple[int, ...]:
    n = len(word)
    img = [0] * n
    for i, x in enumerate(word):
        img[x - 1] = word[(i + 1) % n]
    return tuple(img)


def _ne_direct(word: tuple[int, ...], pi_img: tuple[int, ...]) -> int:
    exc, anti, trivial = _classify(word, pi_img)
    return len(anti - trivial)


def plane_structure_reports(max_n: int = 6) -> list[IdentityReport]:
    """Exhaustive structural checks on two-row arrays.

    Over every pair (long cycle word, arbitrary vertical): the diagonal read
    off the array equals the product s∘pi⁻¹; the non-trivial anti-exceedance
    count equals n − C(pi) − (exceedances); the reflected pair satisfies
    Ne(p) + Ne(p') = n + 1 − C(pi) − C(diagonal).  Over every pair of long
    cycles (s, D) and every legal block transposition: the diagonal is
    preserved, the vertical's parity is preserved, and its cycle count moves
    by −2, 0, or +2.
    """
    reports: list[IdentityReport] = []
    for n in range(2, max_n + 1):
        words = _words(n)
        diag_bad = ne_bad = refl_bad = 0
        checked = 0
        for word in words:
            word_img = _word_to_img(word)
            refl_word = (word[0],) + tuple(reversed(word[1:]))
            for pi_img in itertools.permutations(range(1, n + 1)):
                checked += 1
                pi_inv = _inverse_img(pi_img)
                diag = tuple(word_img[pi_inv[i] - 1] for i in range(n))
                if diag != _diagonal_from_pairs(word, pi_img):
                    diag_bad += 1
                exc, anti, trivial = _classify(word, pi_img)
                a = len(exc)
                c_pi = _cycle_count_img(pi_img)
                ne = len(anti - trivial)
                if ne != n - c_pi - a:
                    ne_bad += 1
                refl_pi = _inverse_img(diag)
                ne_refl = _ne_direct(refl_word, refl_pi)
                if ne + ne_refl != n + 1 - c_pi - _cycle_count_img(diag):
                    refl_bad += 1
        inst = f"n={n} over {checked} arrays"
        reports.append(IdentityReport("plane:diagonal_agreement", inst, diag_bad, 0))
        reports.append(IdentityReport("plane:ntae_count_formula", inst, ne_bad, 0))
        reports.append(IdentityReport("plane:reflection_identity", inst, refl_bad, 0))
        # block transpositions over pairs of long cycles
        if n < 3:
            continue
        hs = [
            (i, j, k)
            for i in range(1, n - 1)
            for j in range(i, n - 1)
            for k in range(j + 1, n)
        ]
        trans_bad = 0
        checked = 0
        for word in words:
            word_img = _word_to_img(word)
            for d_word in words:
                d_img = _word_to_img(d_word)
                d_inv = _inverse_img(d_img)
                pi_img = tuple(d_inv[word_img[i] - 1] for i in range(n))  # D⁻¹∘s
                c_pi = _cycle_count_img(pi_img)
                for h in hs:
                    checked += 1
                    w2, pi2 = _transpose(word, pi_img, *h)
                    if _diagonal_from_pairs(w2, pi2) != d_img:
                        trans_bad += 1
                        continue
                    delta = _cycle_count_img(pi2) - c_pi
                    if delta not in (-2, 0, 2):
                        trans_bad += 1
        inst = f"n={n} over {checked} transpositions"
        reports.append(IdentityReport("plane:transposition_action", inst, trans_bad, 0))
    return reports


# ---------------------------------------------------------------------------
# runner


SUITES = ("classic", "section3", "baserecur", "formulas", "plane", "parity")


@dataclass
class VerifyRun:
    reports: list[IdentityReport]
    audit: list[ParityAuditRecord]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.reports) and all(a.ok for a in self.audit)

    def failures(self) -> list[str]:
        out = [str(r) for r in self.reports if not r.passed]
        out += [str(a) for a in self.audit if not a.ok]
        return out

    def summary_lines(self) -> list[str]:
        by_identity: dict[str, tuple[int, int]] = {}
        for r in self.reports:
            done, bad = by_identity.get(r.identity, (0, 0))
            by_identity[r.identity] = (done + 1, bad + (0 if r.passed else 1))
        lines = []
        for name in sorted(by_identity):
            done, bad = by_identity[name]
            state = "ok" if bad == 0 else f"{bad} FAILED"
            lines.append(f"{name}: {done} instances, {state}")
        if self.audit:
            bad = sum(0 if a.ok else 1 for a in self.audit)
            state = "all true counts zero" if bad == 0 else f"{bad} NONZERO TRUE COUNTS"
            lines.append(f"parity audit: {len(self.audit)} wrong-parity instances, {state}")
        return lines

    def to_dict(self) -> dict:
        return {
            "reports": [r.to_dict() for r in self.reports],
            "audit": [a.to_dict() for a in self.audit],
            "ok": self.ok,
        }


def run_suites(
    suites: Sequence[str] = SUITES,
    max_n: int = 6,
    *,
    baserecur_max_n: int = 12,
    formulas_max_n: int | None = None,
    plane_max_n: int | None = None,
    workers: int = 1,
    p_source: str = "oracle",
) -> VerifyRun:
    unknown = set(suites) - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suites: {sorted(unknown)}")
    reports: list[IdentityReport] = []
    audit: list[ParityAuditRecord] = []
    if "classic" in suites:
        reports += classic_reports(max_n, p_source)
    if "section3" in suites:
        reports += section3_reports(max_n)
    if "baserecur" in suites:
        reports += baserecur_reports(baserecur_max_n)
    if "formulas" in suites:
        reports += formula_vs_oracle_reports(formulas_max_n or max_n, workers)
    if "plane" in suites:
        reports += plane_structure_reports(plane_max_n or max_n)
    if "parity" in suites:
        audit += parity_audit(max_n)
    return VerifyRun(reports=reports, audit=audit)

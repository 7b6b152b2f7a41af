"""Exact enumeration for products of long cycles in symmetric groups:
closed-form counts, an exhaustive brute-force oracle, and identity
verification suites, all in exact integer/rational arithmetic."""

from ._version import __version__
from .errors import (
    DimensionMismatchError,
    DomainError,
    ExactnessError,
    NoSuchPartError,
    NotSeparatedError,
    ParityError,
    ResourceLimitError,
)
from .formulas import (
    CountQuery,
    boccara,
    separated_pairs_by_count,
    evaluate,
    even_factorization_count,
    hultman_expected,
    pairs_by_type,
    separating_by_d,
    separating_total,
    separation_probability,
    zagier_stanley,
)
from .oracle import (
    CountTable,
    OracleResult,
    count_factorizations,
    expected_k_cycles,
    pairs_separating_prefix,
    sweep_fixed_diagonal,
    sweep_pairs,
)
from .partitions import (
    Composition,
    IntegerPartition,
    PartitionSequence,
    binomial,
    falling_factorial,
    kappa,
    lambda_coeff,
    odd_refinements,
    odd_refinements_seq,
    partition_sequences,
    partitions,
    refinement_targets,
    refinement_targets_seq,
    separated_stirling,
    stirling_first,
    z_of,
    z_of_seq,
)
from .permutations import (
    Permutation,
    alpha_type,
    canonical_of_type,
    compose,
    cycle_type,
    d_vector,
    finest_blocks,
    is_alpha_separated,
    long_cycle_iter,
)
from .plane import ExceedanceStats, PlanePermutation

__all__ = [
    "__version__",
    "Composition",
    "CountQuery",
    "CountTable",
    "DimensionMismatchError",
    "DomainError",
    "ExactnessError",
    "ExceedanceStats",
    "IntegerPartition",
    "NoSuchPartError",
    "NotSeparatedError",
    "OracleResult",
    "ParityError",
    "PartitionSequence",
    "Permutation",
    "PlanePermutation",
    "ResourceLimitError",
    "alpha_type",
    "binomial",
    "boccara",
    "canonical_of_type",
    "separated_pairs_by_count",
    "compose",
    "count_factorizations",
    "cycle_type",
    "d_vector",
    "evaluate",
    "even_factorization_count",
    "expected_k_cycles",
    "falling_factorial",
    "finest_blocks",
    "hultman_expected",
    "is_alpha_separated",
    "kappa",
    "lambda_coeff",
    "long_cycle_iter",
    "odd_refinements",
    "odd_refinements_seq",
    "pairs_by_type",
    "pairs_separating_prefix",
    "partition_sequences",
    "partitions",
    "refinement_targets",
    "refinement_targets_seq",
    "separated_stirling",
    "separating_by_d",
    "separating_total",
    "separation_probability",
    "stirling_first",
    "sweep_fixed_diagonal",
    "sweep_pairs",
    "z_of",
    "z_of_seq",
    "zagier_stanley",
]

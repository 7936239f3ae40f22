"""Exact enumeration of row-convex polyominoes by area."""
from .core import (
    Composition,
    Partition,
    compositions,
    distinct_permutations,
    generate_partitions,
    partition_count,
    permutation_factor,
)
from .enumeration import (
    CountSeries,
    composition_weight,
    count,
    count_by_composition_sum,
    count_by_generating_function,
    count_by_linear_recurrence,
    count_by_partition_formula,
    count_by_transfer_dp,
    sliding_factor,
)
from .errors import LimitExceededError, NumericalError, UnsupportedCaseError
from .genfunc import ROW_CONVEX_GF, IntPolynomial, RationalGF, TruncatedSeries, series_expand

__version__ = "0.1.0"

__all__ = [
    "Composition", "Partition", "compositions", "distinct_permutations", "generate_partitions",
    "partition_count", "permutation_factor", "CountSeries", "composition_weight", "count",
    "count_by_composition_sum", "count_by_generating_function", "count_by_linear_recurrence",
    "count_by_partition_formula", "count_by_transfer_dp", "sliding_factor", "LimitExceededError",
    "NumericalError", "UnsupportedCaseError", "ROW_CONVEX_GF", "IntPolynomial", "RationalGF",
    "TruncatedSeries", "series_expand",
]

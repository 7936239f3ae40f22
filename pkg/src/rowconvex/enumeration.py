"""Five independent ways of computing S(N), the number of row-convex polyominoes of area N.

``partition``    sum over partitions of N and their distinct orderings
``composition``  sum over the 2**(N-1) compositions of N
``dp``           O(N^2) dynamic program on two aggregate sequences
``recurrence``   S(N) = 5 S(N-1) - 7 S(N-2) + 4 S(N-3) from N = 5 on
``gf``           power-series expansion of x(1-x)^3 / (1-5x+7x^2-4x^3)

The first two cost exponential time and refuse ``n`` above a hard limit.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Callable, Sequence

from .core import (
    Composition,
    Partition,
    _check_n,
    _partitions,
    _prev_permutation,
    permutation_factor,
)
from .errors import LimitExceededError

EXPONENTIAL_LIMIT = 24

RECURRENCE_COEFFICIENTS = (5, -7, 4)
RECURRENCE_SEEDS = (1, 2, 6, 19)  # S(1), ..., S(4)


@dataclass(frozen=True)
class CountSeries:
    """S(1), ..., S(n_max). Indexing is by area: ``series[n]`` is S(n)."""

    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if not self.values:
            raise ValueError("empty series")
        if any(v <= 0 for v in self.values):
            raise ValueError("counts must be positive")

    @property
    def n_max(self) -> int:
        return len(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= len(self.values):
            raise IndexError(f"area {n} outside 1..{len(self.values)}")
        return self.values[n - 1]

    def __iter__(self):
        return iter(self.values)

    def items(self):
        return enumerate(self.values, start=1)


@dataclass(frozen=True)
class DPAggregates:
    """Coefficient sequences of S(x) = sum F_m(x) and R(x) = sum m F_m(x).

    Index 0 is the constant term (always 0).
    """

    A: tuple[int, ...]
    B: tuple[int, ...]


def sliding_factor(a: int, b: int) -> int:
    """Number of horizontal placements of a row of length ``b`` touching one of length ``a``."""
    if a < 1 or b < 1:
        raise ValueError(f"row lengths must be positive, got ({a}, {b})")
    return a + b - 1


def composition_weight(c: Composition | Sequence[int]) -> int:
    """Product of the sliding factors of consecutive parts (1 for a single part)."""
    parts = c.parts if isinstance(c, Composition) else tuple(c)
    return prod(a + b - 1 for a, b in zip(parts, parts[1:]))


def _check_limit(what, n, limit):
    _check_n(n)
    if limit is not None and n > limit:
        raise LimitExceededError(what, n, limit)


def count_by_partition_formula(
    n: int, *, limit: int | None = EXPONENTIAL_LIMIT, as_printed: bool = False
) -> int:
    """S(n) as a sum over partitions, weighting every distinct ordering of the parts.

    With ``as_printed=True`` the shift product is taken over the sorted
    partition only and multiplied by the permutation factor. That variant
    does not count row-convex polyominoes (it gives 17 at n = 4, not 19)
    and exists only so the difference can be demonstrated.
    """
    _check_limit("partition formula", n, limit)
    total = 0
    for parts in _partitions(n, n):
        if as_printed:
            total += permutation_factor(Partition(parts)) * composition_weight(parts)
            continue
        a = list(parts)
        while True:
            w = 1
            for i in range(len(a) - 1):
                w *= a[i] + a[i + 1] - 1
            total += w
            if not _prev_permutation(a):
                break
    return total


def composition_sum(n: int, factor: Callable[[int, int], int] = sliding_factor) -> int:
    """Sum over all compositions of ``n`` of the product of ``factor`` on adjacent parts.

    Walks the composition tree depth first, carrying the running product,
    so shared prefixes are multiplied once.
    """
    _check_n(n)
    total = 0
    # stack of (remaining area, last part, running product)
    stack = [(n - first, first, 1) for first in range(1, n + 1)]
    while stack:
        rest, last, w = stack.pop()
        if rest == 0:
            total += w
            continue
        for nxt in range(1, rest + 1):
            stack.append((rest - nxt, nxt, w * factor(last, nxt)))
    return total


def count_by_composition_sum(n: int, *, limit: int | None = EXPONENTIAL_LIMIT) -> int:
    """S(n) as the sliding-factor weighted count of all compositions of ``n``."""
    _check_limit("composition sum", n, limit)
    return composition_sum(n, lambda a, b: a + b - 1)


def transfer_aggregates(n_max: int) -> DPAggregates:
    """Coefficients of S(x) and R(x) up to x**n_max.

    Uses F_m = x^m (1 + R + (m-1) S) read coefficient-wise:
    [x^n] F_m = [n == m] + B(n-m) + (m-1) A(n-m) for m < n.
    """
    _check_n(n_max)
    A = [0] * (n_max + 1)
    B = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        a, b = 1, n  # the single-row term F_n contributes x^n with weight 1 (and n to B)
        for m in range(1, n):
            f = B[n - m] + (m - 1) * A[n - m]
            a += f
            b += m * f
        A[n] = a
        B[n] = b
    return DPAggregates(tuple(A), tuple(B))


def count_by_transfer_dp(n_max: int) -> CountSeries:
    """S(1), ..., S(n_max) from the transfer-series dynamic program."""
    agg = transfer_aggregates(n_max)
    return CountSeries(agg.A[1:])


def count_by_linear_recurrence(n_max: int) -> CountSeries:
    """S(1), ..., S(n_max) by extending the seeds 1, 2, 6, 19 with the order-3 recurrence."""
    _check_n(n_max)
    vals = list(RECURRENCE_SEEDS[:n_max])
    c1, c2, c3 = RECURRENCE_COEFFICIENTS
    while len(vals) < n_max:
        vals.append(c1 * vals[-1] + c2 * vals[-2] + c3 * vals[-3])
    return CountSeries(vals)


def count_by_generating_function(n_max: int) -> CountSeries:
    """S(1), ..., S(n_max) read off the series expansion of the rational generating function."""
    from .genfunc import ROW_CONVEX_GF, series_expand

    _check_n(n_max)
    return CountSeries(series_expand(ROW_CONVEX_GF, n_max).coefficients[1:])


def recurrence_residuals(series: CountSeries) -> list[int]:
    """S(N) - 5 S(N-1) + 7 S(N-2) - 4 S(N-3) for N = 5..n_max."""
    s = series
    return [s[N] - 5 * s[N - 1] + 7 * s[N - 2] - 4 * s[N - 3] for N in range(5, s.n_max + 1)]


METHODS = ("partition", "composition", "dp", "recurrence", "gf", "oracle")


def method_limit(method: str) -> int | None:
    """Largest ``n`` a counting method accepts (None for no limit)."""
    if method in ("partition", "composition"):
        return EXPONENTIAL_LIMIT
    if method == "oracle":
        from .oracle import ORACLE_LIMIT

        return ORACLE_LIMIT
    if method in ("dp", "recurrence", "gf"):
        return None
    raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")


def count(n: int, method: str = "dp") -> int:
    """S(n) by the named method."""
    method_limit(method)
    if method == "partition":
        return count_by_partition_formula(n)
    if method == "composition":
        return count_by_composition_sum(n)
    if method == "dp":
        return count_by_transfer_dp(n)[n]
    if method == "recurrence":
        return count_by_linear_recurrence(n)[n]
    if method == "gf":
        return count_by_generating_function(n)[n]
    from .oracle import count_row_convex_oracle

    return count_row_convex_oracle(n)

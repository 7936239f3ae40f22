"""Integer partitions and compositions.

Partitions are generated largest-part-first, and the distinct orderings of a
partition are produced by a predecessor step over the multiset, so no
ordering is ever emitted twice.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import factorial, prod
from typing import Iterator


def _check_n(n) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"n must be an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return n


@dataclass(frozen=True)
class Partition:
    """Non-increasing positive parts; ``n`` is their sum."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("a partition needs at least one part")
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be non-increasing: {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def multiplicities(self) -> dict[int, int]:
        """Map each part value to the number of times it occurs."""
        return dict(Counter(self.parts))


@dataclass(frozen=True)
class Composition:
    """Ordered positive parts, read as row lengths from bottom to top."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("a composition needs at least one part")
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def to_partition(self) -> Partition:
        return Partition(tuple(sorted(self.parts, reverse=True)))


def _partitions(n, max_part):
    if n == 0:
        yield ()
        return
    for i in range(min(max_part, n), 0, -1):
        for tail in _partitions(n - i, i):
            yield (i,) + tail


def generate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of ``n`` once, in decreasing lexicographic order.

    >>> [p.parts for p in generate_partitions(3)]
    [(3,), (2, 1), (1, 1, 1)]
    """
    _check_n(n)
    for parts in _partitions(n, n):
        yield Partition(parts)


def partition_count(n: int) -> int:
    """Number of partitions of ``n``, counted off :func:`generate_partitions`."""
    _check_n(n)
    return sum(1 for _ in _partitions(n, n))


def permutation_factor(p: Partition) -> int:
    """Number of distinct orderings of the parts of ``p``: l! / prod(m_v!)."""
    mult = p.multiplicities()
    if len(mult) == 1:
        return 1
    return factorial(len(p)) // prod(factorial(m) for m in mult.values())


def _prev_permutation(a: list) -> bool:
    # in-place step to the lexicographically preceding arrangement
    i = len(a) - 2
    while i >= 0 and a[i] <= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(a) - 1
    while a[j] >= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    a[i + 1:] = reversed(a[i + 1:])
    return True


def distinct_permutations(p: Partition) -> Iterator[Composition]:
    """Yield each distinct ordering of the parts of ``p`` exactly once.

    Orderings come out in decreasing lexicographic order, starting from the
    partition itself.
    """
    a = list(p.parts)
    while True:
        yield Composition(tuple(a))
        if not _prev_permutation(a):
            return


def compositions(n: int) -> Iterator[Composition]:
    """Yield all ``2**(n-1)`` compositions of ``n``."""
    _check_n(n)

    def rec(rest):
        if rest == 0:
            yield ()
            return
        for first in range(rest, 0, -1):
            for tail in rec(rest - first):
                yield (first,) + tail

    for parts in rec(n):
        yield Composition(parts)

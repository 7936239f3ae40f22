import sys
from itertools import permutations

import pytest


def brute_partitions(n):
    """Partitions of n by filtering all non-increasing tuples built from smaller partitions."""
    out = {()} if n == 0 else set()
    if n:
        for first in range(1, n + 1):
            for rest in brute_partitions(n - first):
                out.add(tuple(sorted((first,) + rest, reverse=True)))
    return out


def brute_compositions(n):
    """Compositions of n from the 2**(n-1) cut sets of n - 1 gaps."""
    out = []
    for mask in range(2 ** (n - 1)):
        parts, run = [], 1
        for gap in range(n - 1):
            if mask >> gap & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(tuple(parts))
    return out


def brute_distinct_orderings(parts):
    return set(permutations(parts))


TABLE = (1, 2, 6, 19, 61, 196, 629, 2017, 6466, 20727, 66441, 212980)


@pytest.fixture
def table():
    return TABLE


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.format_line(number))

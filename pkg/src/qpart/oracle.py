"""Brute-force partition counters that never touch series arithmetic.

These exist to cross-check the series engine, so they are kept naive on
purpose and refuse inputs above small hard bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

COLOUR_BOUND = 60
SIGNED_BOUND = 40
CLASSICAL_BOUND = 10_000


class OracleBoundError(ValueError):
    pass


@dataclass(frozen=True)
class OracleCount:
    n: int
    r: int
    value: int
    even_count: Optional[int] = None
    odd_count: Optional[int] = None

    def __post_init__(self):
        if self.r < 0 and self.value != self.even_count - self.odd_count:
            raise ValueError("signed count must equal even_count - odd_count")


def _check_bound(n, bound, what):
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n > bound:
        raise OracleBoundError(
            f"{what} oracle is capped at n={bound} (asked for {n}); "
            "use the series engine (pr_series) for larger n"
        )


def count_colour_partitions(n: int, r: int, bound: int = COLOUR_BOUND) -> OracleCount:
    """Partitions of n where every part comes in r distinguishable colours.

    Coin-change DP over the r*n coloured part types (value, colour), taken
    in a fixed order so that each multiset is counted once.
    """
    if r < 1:
        raise ValueError(f"colour count must be positive, got {r}")
    _check_bound(n, bound, "colour-partition")
    ways = [1] + [0] * n
    for value in range(1, n + 1):
        for _colour in range(r):
            for total in range(value, n + 1):
                ways[total] += ways[total - value]
    return OracleCount(n, r, ways[n])


def count_signed_distinct(n: int, r: int, bound: int = SIGNED_BOUND) -> OracleCount:
    """Sets of distinct (part, colour) pairs summing to n, split by parity.

    Backtracks over part values from the largest down; for each value it
    chooses how many of the |r| colours to use and weights the branch by the
    number of colour subsets of that size.
    """
    if r > -1:
        raise ValueError(f"signed count needs r <= -1, got {r}")
    _check_bound(n, bound, "signed distinct-part")
    colours = -r
    counts = [0, 0]  # even, odd

    def walk(remaining, value, size, weight):
        if remaining == 0:
            counts[size % 2] += weight
            return
        if value == 0:
            return
        for used in range(min(colours, remaining // value), -1, -1):
            walk(remaining - used * value, value - 1, size + used, weight * comb(colours, used))

    walk(n, n, 0, 1)
    even, odd = counts
    return OracleCount(n, r, even - odd, even, odd)


def count_distinct_coloured_sets(n: int, colours: int) -> int:
    """Number of sets of distinct (part, colour) pairs summing to n.

    Walks the (part, colour) pairs one at a time, include or skip, with no
    parity tracking and no binomial shortcut.  Used to audit the split above.
    """
    pairs = [(v, c) for v in range(n, 0, -1) for c in range(colours)]

    def walk(i, remaining):
        if remaining == 0:
            return 1
        if i == len(pairs):
            return 0
        value = pairs[i][0]
        # the rest of the pairs are at most `value` each
        if value * (len(pairs) - i) < remaining:
            return 0
        taken = walk(i + 1, remaining - value) if value <= remaining else 0
        return taken + walk(i + 1, remaining)

    return walk(0, n)


def classical_p(n: int) -> int:
    """p(n) by the coin-change DP over parts 1..n."""
    _check_bound(n, CLASSICAL_BOUND, "classical partition")
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]

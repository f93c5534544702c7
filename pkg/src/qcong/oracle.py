"""Ground-truth enumeration of two-color partitions.

A counted partition of n (for parameter k) uses blue/red parts and satisfies:
  1. the smallest part value s is odd and occurs at least once in blue,
  2. every even blue part value is >= s + 2k - 1,
  3. within each color the even part values are distinct.

Everything here is pure combinatorial backtracking; no series arithmetic is
imported, so these counts can referee the generating-function builders.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal, Union

BLUE = "blue"
RED = "red"


@dataclass(frozen=True)
class ColoredPartition:
    """Parts as (value, color, multiplicity), values weakly decreasing,
    blue listed before red within a value."""

    parts: tuple[tuple[int, str, int], ...]

    def total(self) -> int:
        return sum(v * m for v, _, m in self.parts)

    def smallest_part(self) -> int:
        return self.parts[-1][0]


@dataclass(frozen=True)
class OracleCount:
    k: Union[int, Literal["limit"]]
    n: int
    count: int


def enumerate_ck(k: int, n: int) -> Iterator[ColoredPartition]:
    """Yield every counted partition of n for parameter k, by backtracking
    over part values (descending), colors, and multiplicities."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    min_even_blue_gap = 2 * k - 1
    for s in range(1, n + 1, 2):
        yield from _extend(max(n - s, s), n - s, s, min_even_blue_gap, ())


def _extend(v: int, remaining: int, s: int, gap: int,
            acc: tuple) -> Iterator[ColoredPartition]:
    # acc holds entries for values > v; the mandatory blue copy of s is
    # appended at the bottom so repeated blue s merges into one entry
    if remaining == 0:
        yield ColoredPartition(acc + ((s, BLUE, 1),))
        return
    if v <= s:
        # only copies of s remain; s is odd so multiplicities are free
        for extra_blue in range(remaining // s + 1):
            rest = remaining - extra_blue * s
            if rest % s:
                continue
            entry = [(s, BLUE, 1 + extra_blue)]
            if rest:
                entry.append((s, RED, rest // s))
            yield ColoredPartition(acc + tuple(entry))
        return
    if v % 2:
        blue_choices = range(remaining // v + 1)
    else:
        blue_choices = range(2) if v - s >= gap and v <= remaining else range(1)
    for mb in blue_choices:
        left = remaining - mb * v
        red_max = left // v if v % 2 else min(1, left // v)
        for mr in range(red_max + 1):
            here = acc
            if mb:
                here = here + ((v, BLUE, mb),)
            if mr:
                here = here + ((v, RED, mr),)
            yield from _extend(v - 1, left - mr * v, s, gap, here)


def count_ck(k: int, n: int) -> int:
    return sum(1 for _ in enumerate_ck(k, n))


def count_c_limit(n: int) -> int:
    # for k with s + 2k - 1 > n no even blue part fits in any partition of n,
    # so the count has stabilized; k = max(n, 1) is safely past that point
    if n < 0:
        raise ValueError("n must be >= 0")
    return count_ck(max(n, 1), n)


def oracle_table(k: Union[int, Literal["limit"]], n_max: int) -> list[OracleCount]:
    counts = []
    for n in range(n_max + 1):
        c = count_c_limit(n) if k == "limit" else count_ck(k, n)
        counts.append(OracleCount(k=k, n=n, count=c))
    return counts

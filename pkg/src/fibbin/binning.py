"""Fibonacci and power-of-b binning of integer-abscissa frequency data.

Fibonacci numbers follow the convention F_0 = F_1 = 1. Bin j covers the
half-open integer interval [s + F_{j+1} - 1, s + F_{j+2} - 1), so its width is
F_j and, for s = 1, its extremes are consecutive Fibonacci numbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from .distribution import FrequencyTable
from .errors import DomainError, FibonacciOverflowError, InvalidRangeError

UINT64_MAX = 2**64 - 1
INT64_MAX = 2**63 - 1


@lru_cache(maxsize=None)
def _fib_table() -> tuple[int, ...]:
    fib = [1, 1]
    while fib[-1] + fib[-2] <= UINT64_MAX:
        fib.append(fib[-1] + fib[-2])
    return tuple(fib)


def fibonacci(j: int) -> int:
    """Return F_j with F_0 = F_1 = 1.

    Raises FibonacciOverflowError once F_j leaves the unsigned 64-bit range
    (j >= 93).
    """
    if j < 0:
        raise ValueError(f"Fibonacci index must be nonnegative, got {j}")
    table = _fib_table()
    if j >= len(table):
        raise FibonacciOverflowError(f"F_{j} exceeds the unsigned 64-bit range")
    return table[j]


@dataclass(frozen=True)
class BinInterval:
    index: int
    left: int
    right: int

    @property
    def width(self) -> int:
        return self.right - self.left


def bin_intervals(s: int, x_max: int) -> list[BinInterval]:
    """Contiguous Fibonacci-width intervals starting at ``s`` up to the first one
    whose left end exceeds ``x_max``."""
    if x_max < s:
        raise InvalidRangeError(f"x_max={x_max} is below the starting offset s={s}")
    out = []
    j = 0
    while True:
        left = s + fibonacci(j + 1) - 1
        if left > x_max:
            return out
        right = s + fibonacci(j + 2) - 1
        if right > INT64_MAX:
            raise FibonacciOverflowError(f"bin {j} right end {right} exceeds the 64-bit integer range")
        out.append(BinInterval(j, left, right))
        j += 1


@dataclass(frozen=True, eq=False)
class BinnedSeries:
    """Points (center, mean) of a binning plus the integer edges that produced them.

    ``scheme`` is ``"fibonacci"`` or ``"power_of_b"`` (with ``base`` set).
    Empty bins are kept with mean 0.
    """

    centers: np.ndarray
    means: np.ndarray
    lefts: np.ndarray
    rights: np.ndarray
    source_offset: int
    scheme: str
    base: Optional[float] = None

    @property
    def widths(self) -> np.ndarray:
        return self.rights - self.lefts

    @property
    def points(self) -> list[tuple[float, float]]:
        return list(zip(self.centers.tolist(), self.means.tolist()))

    def __len__(self):
        return self.centers.size

    def nonempty(self) -> "BinnedSeries":
        keep = self.means > 0
        return BinnedSeries(
            self.centers[keep], self.means[keep], self.lefts[keep], self.rights[keep],
            self.source_offset, self.scheme, self.base,
        )


def _bin_from_edges(table: FrequencyTable, lefts: np.ndarray, rights: np.ndarray):
    widths = rights - lefts
    # every abscissa falls in exactly one bin since lefts[0] = s <= min x and rights[-1] > max x
    idx = np.searchsorted(rights, table.abscissas, side="right")
    sums = np.bincount(idx, weights=table.weights, minlength=lefts.size)
    means = sums / widths
    centers = lefts + (widths - 1) / 2.0
    return centers, means


def fibonacci_bin(table: FrequencyTable) -> BinnedSeries:
    """Average the table over Fibonacci-width bins anchored at ``table.offset``.

    Center of bin k is l_k + (F_k - 1)/2; mean is the weight inside the bin
    divided by F_k. Abscissas missing from the table count as zero, including
    on the part of the last bin past the largest observation.
    """
    intervals = bin_intervals(table.offset, table.max_abscissa)
    lefts = np.array([b.left for b in intervals], dtype=np.int64)
    rights = np.array([b.right for b in intervals], dtype=np.int64)
    centers, means = _bin_from_edges(table, lefts, rights)
    return BinnedSeries(centers, means, lefts, rights, table.offset, "fibonacci")


def power_of_b_edges(s: int, x_max: int, base: float) -> np.ndarray:
    """Integer edges s, s + round(b) - 1, s + round(b^2) - 1, ... (duplicates dropped),
    extended until the last edge exceeds ``x_max``."""
    if not base > 1:
        raise DomainError(f"base must be > 1, got {base}")
    if x_max < s:
        raise InvalidRangeError(f"x_max={x_max} is below the starting offset s={s}")
    edges = [s]
    j = 1
    while edges[-1] <= x_max:
        try:
            e = s + math.floor(base**j + 0.5) - 1
        except OverflowError:
            e = INT64_MAX + 1
        if e > INT64_MAX:
            raise FibonacciOverflowError(f"power-of-{base} edge {j} exceeds the 64-bit integer range")
        if e > edges[-1]:
            edges.append(e)
        j += 1
    return np.array(edges, dtype=np.int64)


def power_of_b_bin(table: FrequencyTable, base: float) -> BinnedSeries:
    edges = power_of_b_edges(table.offset, table.max_abscissa, base)
    lefts, rights = edges[:-1], edges[1:]
    centers, means = _bin_from_edges(table, lefts, rights)
    return BinnedSeries(centers, means, lefts, rights, table.offset, "power_of_b", float(base))

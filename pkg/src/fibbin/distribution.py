"""Frequency tables and size-rank series."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .errors import (
    DuplicateAbscissaError,
    EmptyInputError,
    InputError,
    NegativeWeightError,
    OffsetError,
)


def _frozen(a, dtype):
    a = np.array(a, dtype=dtype)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class FrequencyTable:
    """Distinct integer abscissas with nonnegative weights and a starting offset.

    Construct through :func:`tally` or :func:`from_pairs`; the constructor
    validates but does not sort.
    """

    abscissas: np.ndarray
    weights: np.ndarray
    offset: int

    def __post_init__(self):
        x = _frozen(self.abscissas, np.int64)
        w = _frozen(self.weights, np.float64)
        object.__setattr__(self, "abscissas", x)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "offset", int(self.offset))

        if x.ndim != 1 or w.shape != x.shape:
            raise InputError("abscissas and weights must be 1-d arrays of equal length")
        if x.size == 0:
            raise EmptyInputError("frequency table is empty")
        if x.size > 1 and np.any(np.diff(x) <= 0):
            i = int(np.flatnonzero(np.diff(x) <= 0)[0])
            if x[i] == x[i + 1]:
                raise DuplicateAbscissaError(int(x[i]))
            raise InputError("abscissas must be strictly increasing")
        if not np.all(np.isfinite(w)):
            raise InputError("weights must be finite")
        if np.any(w < 0):
            i = int(np.flatnonzero(w < 0)[0])
            raise NegativeWeightError(int(x[i]), float(w[i]))
        if not np.any(w > 0):
            raise InputError("at least one weight must be positive")
        if x[0] < self.offset:
            raise OffsetError(int(x[0]), self.offset)

    @property
    def entries(self) -> list[tuple[int, float]]:
        return list(zip(self.abscissas.tolist(), self.weights.tolist()))

    @property
    def total(self) -> float:
        return float(self.weights.sum())

    @property
    def max_abscissa(self) -> int:
        return int(self.abscissas[-1])

    def __len__(self):
        return self.abscissas.size

    def __eq__(self, other):
        if not isinstance(other, FrequencyTable):
            return NotImplemented
        return (
            self.offset == other.offset
            and np.array_equal(self.abscissas, other.abscissas)
            and np.array_equal(self.weights, other.weights)
        )

    def scaled(self, c: float) -> "FrequencyTable":
        return FrequencyTable(self.abscissas, self.weights * c, self.offset)


@dataclass(frozen=True, eq=False)
class SizeRankSeries:
    abscissas: np.ndarray
    tail_sums: np.ndarray

    @property
    def points(self) -> list[tuple[int, float]]:
        return list(zip(self.abscissas.tolist(), self.tail_sums.tolist()))


def _resolve_offset(min_abscissa: int, offset: Optional[int]) -> int:
    if offset is None:
        return int(min_abscissa)
    if min_abscissa < offset:
        raise OffsetError(int(min_abscissa), int(offset))
    return int(offset)


def tally(observations: Iterable[int], offset: Optional[int] = None) -> FrequencyTable:
    """Count occurrences of each distinct observation.

    The offset defaults to the smallest observation.
    """
    obs = np.asarray(list(observations) if not isinstance(observations, np.ndarray) else observations)
    if obs.size == 0:
        raise EmptyInputError("no observations")
    if obs.dtype.kind not in "iu":
        if obs.dtype.kind == "f" and np.all(obs == np.round(obs)):
            obs = obs.astype(np.int64)
        else:
            raise InputError("observations must be integers")
    values, counts = np.unique(obs.astype(np.int64), return_counts=True)
    s = _resolve_offset(int(values[0]), offset)
    return FrequencyTable(values, counts.astype(np.float64), s)


def from_pairs(pairs: Iterable[tuple[int, float]], offset: Optional[int] = None) -> FrequencyTable:
    pairs = list(pairs)
    if not pairs:
        raise EmptyInputError("no (abscissa, weight) pairs")
    seen = Counter(int(x) for x, _ in pairs)
    dup = [x for x, c in seen.items() if c > 1]
    if dup:
        raise DuplicateAbscissaError(min(dup))
    for x, y in pairs:
        if y < 0:
            raise NegativeWeightError(int(x), float(y))
    pairs.sort(key=lambda p: p[0])
    x = [int(p[0]) for p in pairs]
    w = [float(p[1]) for p in pairs]
    s = _resolve_offset(x[0], offset)
    return FrequencyTable(x, w, s)


def size_rank(table: FrequencyTable) -> SizeRankSeries:
    """Tail sums: for each observed abscissa x, the total weight at abscissas >= x.

    Accumulates from the largest abscissa downwards so results are reproducible.
    """
    tails = np.cumsum(table.weights[::-1])[::-1]
    return SizeRankSeries(table.abscissas, _frozen(tails, np.float64))

"""Seeded samplers for the discrete power law and the discrete exponential law.

All randomness comes from numpy's PCG64 bit generator, whose output stream
is fixed across platforms for a given seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import InvalidSpecError
from .zeta import hurwitz_zeta

# proposals at or beyond this value are redrawn, truncating the support
SAMPLE_CAP = 2**62

_BATCH_MIN = 1024


@dataclass(frozen=True)
class DiscretePowerLaw:
    """p(x) = x^-alpha / zeta(alpha, xmin) for integer x >= xmin."""

    alpha: float
    xmin: int = 1

    def __post_init__(self):
        if not self.alpha > 1:
            raise InvalidSpecError(f"power-law alpha must be > 1, got {self.alpha}")
        if int(self.xmin) != self.xmin or self.xmin < 1:
            raise InvalidSpecError(f"power-law xmin must be an integer >= 1, got {self.xmin}")

    def pmf(self, x):
        x = np.asarray(x, dtype=np.float64)
        return np.where(x >= self.xmin, np.maximum(x, self.xmin) ** -self.alpha, 0.0) / hurwitz_zeta(self.alpha, self.xmin)

    def sf(self, x):
        """P(X >= x) for integer x."""
        x = np.maximum(np.asarray(x, dtype=np.float64), self.xmin)
        return hurwitz_zeta(self.alpha, x) / hurwitz_zeta(self.alpha, self.xmin)

    def draw(self, rng: np.random.Generator, n: int) -> np.ndarray:
        return _draw_power_law(rng, self.alpha, int(self.xmin), n)


@dataclass(frozen=True)
class DiscreteExponential:
    """p(x) proportional to exp(-x / mean) for integer x >= xmin, a geometric law.

    ``mean`` is the scale of the exponential; the mean of x - xmin is
    1 / (exp(1/mean) - 1), which approaches ``mean`` for large scales.
    """

    mean: float
    xmin: int = 0

    def __post_init__(self):
        if not self.mean > 0:
            raise InvalidSpecError(f"exponential mean must be > 0, got {self.mean}")
        if int(self.xmin) != self.xmin or self.xmin < 0:
            raise InvalidSpecError(f"exponential xmin must be an integer >= 0, got {self.xmin}")

    def pmf(self, x):
        x = np.asarray(x, dtype=np.float64)
        lam = 1.0 / self.mean
        return np.where(x >= self.xmin, -np.expm1(-lam) * np.exp(-lam * (x - self.xmin)), 0.0)

    def sf(self, x):
        x = np.maximum(np.asarray(x, dtype=np.float64), self.xmin)
        return np.exp(-(x - self.xmin) / self.mean)

    def draw(self, rng: np.random.Generator, n: int) -> np.ndarray:
        out = np.empty(0, dtype=np.int64)
        while out.size < n:
            k = np.floor(self.mean * rng.standard_exponential(n - out.size))
            k = k[k < SAMPLE_CAP - self.xmin]
            out = np.concatenate([out, k.astype(np.int64) + self.xmin])
        return out


Law = Union[DiscretePowerLaw, DiscreteExponential]


@dataclass(frozen=True)
class SampleSpec:
    law: Law
    count: int
    seed: int = 0

    def __post_init__(self):
        if not isinstance(self.law, (DiscretePowerLaw, DiscreteExponential)):
            raise InvalidSpecError(f"unknown law {self.law!r}")
        if int(self.count) != self.count or self.count < 1:
            raise InvalidSpecError(f"sample count n must be a positive integer, got {self.count}")
        if int(self.seed) != self.seed or not 0 <= self.seed < 2**64:
            raise InvalidSpecError(f"seed must be an unsigned 64-bit integer, got {self.seed}")


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    """PCG64 generator for ``seed``; extra integers select an independent substream."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([int(seed), *map(int, stream)])))


def _acceptance(k: np.ndarray, alpha: float) -> np.ndarray:
    # Ratio of the target mass k^-alpha to the rounded-Pareto proposal mass
    # (k-1/2)^(1-alpha) - (k+1/2)^(1-alpha), scaled by (alpha-1). Convexity of
    # t^-alpha keeps it in (0, 1]; written to avoid cancellation for large k.
    beta = 1.0 - alpha
    h = 0.5 / k
    lp, lm = np.log1p(h), np.log1p(-h)
    g = np.exp(beta * lp) * np.expm1(beta * (lm - lp))
    return (alpha - 1.0) / (k * g)


def _draw_power_law(rng: np.random.Generator, alpha: float, xmin: int, n: int) -> np.ndarray:
    # Inverse-CDF draw from the continuous Pareto on [xmin - 1/2, inf), rounded
    # to the nearest integer, then thinned so accepted values follow x^-alpha exactly.
    out = []
    have = 0
    scale = xmin - 0.5
    while have < n:
        m = max(_BATCH_MIN, int(1.3 * (n - have)))
        u = 1.0 - rng.random(m)
        y = scale * u ** (-1.0 / (alpha - 1.0))
        v = rng.random(m)
        ok = y < SAMPLE_CAP
        k = np.floor(y[ok] + 0.5)
        k = k[v[ok] < _acceptance(k, alpha)]
        out.append(k.astype(np.int64))
        have += k.size
    return np.concatenate(out)[:n]


def sample(spec: SampleSpec) -> np.ndarray:
    """Draw ``spec.count`` integers from ``spec.law``; identical specs give identical output."""
    return spec.law.draw(make_rng(spec.seed), int(spec.count))


def sample_power_law(alpha: float, xmin: int, n: int, seed: int = 0) -> np.ndarray:
    return sample(SampleSpec(DiscretePowerLaw(alpha, xmin), n, seed))


def sample_exponential(mean: float, xmin: int, n: int, seed: int = 0) -> np.ndarray:
    return sample(SampleSpec(DiscreteExponential(mean, xmin), n, seed))

"""Discrete power-law fitting.

Maximum-likelihood exponent for a given xmin, KS distance between the
empirical tail and the fitted law, a KS-minimising scan over candidate xmin
values, and a semiparametric bootstrap p-value for the power-law hypothesis.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from .distribution import FrequencyTable, tally
from .errors import DomainError, EmptyTailError, TooFewPointsError
from .samplers import DiscretePowerLaw, make_rng
from .zeta import hurwitz_zeta

ALPHA_LOWER = 1.0
ALPHA_UPPER = 6.0
ALPHA_TOL = 1e-6
MIN_TAIL = 10

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
# the log-likelihood diverges at alpha = 1; start the bracket just above it
_LOWER_EPS = 1e-9


@dataclass(frozen=True)
class PowerLawFit:
    alpha: float
    xmin: int
    ks: float
    tail_count: float
    p_value: Optional[float] = None

    def with_p_value(self, p: float) -> "PowerLawFit":
        return replace(self, p_value=p)


@dataclass(frozen=True)
class BootstrapResult:
    p_value: float
    replicates: int
    skipped: int
    ks_observed: float
    ks_replicates: np.ndarray


def _tail_stats(table: FrequencyTable):
    """Per-abscissa tail weight and tail sum of w*ln(x), accumulated from the top."""
    x, w = table.abscissas, table.weights
    n = np.cumsum(w[::-1])[::-1]
    # abscissas below 1 never enter a tail (xmin >= 1); keep their log finite
    slog = np.cumsum((w * np.log(np.maximum(x, 1)))[::-1])[::-1]
    return n, slog


def _golden_alpha(n, slog, xmin, lower=ALPHA_LOWER, upper=ALPHA_UPPER, tol=ALPHA_TOL):
    """Vectorised golden-section minimisation of the per-observation negative
    log-likelihood ln zeta(a, xmin) + a * slog / n over a in (lower, upper]."""
    n, slog, xmin = np.broadcast_arrays(
        np.asarray(n, float), np.asarray(slog, float), np.asarray(xmin, float)
    )
    mean_log = slog / n

    def f(a):
        return np.log(hurwitz_zeta(a, xmin)) + a * mean_log

    a = np.full(n.shape, lower + _LOWER_EPS)
    b = np.full(n.shape, float(upper))
    steps = math.ceil(math.log(tol / (upper - lower)) / math.log(_INVPHI))
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(steps):
        left = fc < fd
        # keep [a, d] where f(c) < f(d), else [c, b]
        b = np.where(left, d, b)
        a = np.where(left, a, c)
        new_c = b - _INVPHI * (b - a)
        new_d = a + _INVPHI * (b - a)
        c_next = np.where(left, new_c, d)
        d_next = np.where(left, c, new_d)
        f_new = f(np.where(left, new_c, new_d))
        fc, fd = np.where(left, f_new, fd), np.where(left, fc, f_new)
        c, d = c_next, d_next
    return (a + b) / 2.0


def _tail_index(table: FrequencyTable, xmin: int) -> int:
    i = int(np.searchsorted(table.abscissas, xmin, side="left"))
    if i == len(table) or not np.any(table.weights[i:] > 0):
        raise EmptyTailError(f"no positive weight at abscissas >= {xmin}")
    return i


def mle_alpha(table: FrequencyTable, xmin: int) -> float:
    """Maximum-likelihood exponent of a discrete power law fitted to the table tail x >= xmin.

    Weights act as (possibly fractional) counts. Golden-section search on
    (1, 6] to within 1e-6.
    """
    if xmin < 1:
        raise DomainError(f"xmin must be >= 1, got {xmin}")
    i = _tail_index(table, xmin)
    x, w = table.abscissas[i:], table.weights[i:]
    n = w.sum()
    slog = (w * np.log(x)).sum()
    return float(_golden_alpha(n, slog, xmin))


def _ks_tail(x, w, alpha, xmin):
    # Supremum over all integers >= xmin. Between consecutive observed
    # abscissas the empirical CDF is flat and the model CDF increasing, so the
    # extremes sit at each observed x and just before the next one.
    ecdf = np.cumsum(w) / w.sum()
    # zeta at xmin, then at x_i + 1 (model CDF at x_i), then at x_{i+1} (model CDF just before x_{i+1})
    z = hurwitz_zeta(alpha, np.concatenate(([xmin], x + 1.0, x[1:])))
    m = x.size
    model = 1.0 - z[1:] / z[0]
    d = np.abs(ecdf - model[:m]).max()
    if m > 1:
        d = max(d, np.abs(ecdf[:-1] - model[m:]).max())
    if x[0] > xmin:
        # empirical CDF is still 0 just below the first observed abscissa
        d = max(d, 1.0 - hurwitz_zeta(alpha, x[0]) / z[0])
    return float(min(d, 1.0))


def ks_statistic(table: FrequencyTable, alpha: float, xmin: int) -> float:
    """Largest gap between the empirical tail CDF and the power-law CDF on x >= xmin."""
    i = _tail_index(table, xmin)
    x = table.abscissas[i:].astype(float)
    return _ks_tail(x, table.weights[i:], alpha, xmin)


def scan_xmin(table: FrequencyTable, min_tail: float = MIN_TAIL) -> PowerLawFit:
    """Fit alpha at every observed abscissa with tail weight >= ``min_tail`` and keep
    the candidate with the smallest KS distance (ties go to the smaller xmin)."""
    if len(table) < 2:
        raise TooFewPointsError("need at least two distinct abscissas to fit")
    x, w = table.abscissas, table.weights
    n, slog = _tail_stats(table)
    cand = np.flatnonzero((n >= min_tail) & (x >= 1) & (w > 0))
    if cand.size == 0:
        raise TooFewPointsError(f"no candidate xmin leaves a tail of weight >= {min_tail}")
    alphas = _golden_alpha(n[cand], slog[cand], x[cand])
    xf = x.astype(float)
    ks = np.array([_ks_tail(xf[i:], w[i:], a, xf[i]) for i, a in zip(cand, alphas)])
    best = int(np.argmin(ks))
    i = cand[best]
    tail = float(n[i])
    if tail == round(tail):
        tail = int(round(tail))
    return PowerLawFit(float(alphas[best]), int(x[i]), float(ks[best]), tail)


def _replicate_ks(args):
    table, fit, seed, index, min_tail = args
    rng = make_rng(seed, index)
    x, w = table.abscissas, table.weights
    total = w.sum()
    n = int(round(total))
    head = x < fit.xmin
    n_tail = int(rng.binomial(n, w[~head].sum() / total))
    parts = [DiscretePowerLaw(fit.alpha, fit.xmin).draw(rng, n_tail)] if n_tail else []
    if n - n_tail:
        hw = w[head]
        parts.append(rng.choice(x[head], size=n - n_tail, p=hw / hw.sum()))
    try:
        return scan_xmin(tally(np.concatenate(parts)), min_tail).ks
    except (TooFewPointsError, EmptyTailError):
        return None


def bootstrap(
    table: FrequencyTable,
    fit: PowerLawFit,
    replicates: int = 100,
    seed: int = 0,
    *,
    min_tail: float = MIN_TAIL,
    workers: int = 1,
) -> BootstrapResult:
    """Semiparametric bootstrap of the KS statistic.

    Each replicate keeps the sample size, draws the number of tail points
    binomially, takes tail points from the fitted power law and head points
    (x < xmin) from the empirical head, then reruns :func:`scan_xmin`.
    Replicate ``i`` uses the substream (seed, i), so the result does not
    depend on ``workers``. Replicates whose refit is impossible are skipped
    and excluded from both sides of the ratio.
    """
    if replicates < 1:
        raise DomainError(f"replicates must be >= 1, got {replicates}")
    jobs = [(table, fit, seed, i, min_tail) for i in range(replicates)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_replicate_ks, jobs, chunksize=max(1, replicates // (4 * workers))))
    else:
        results = [_replicate_ks(j) for j in jobs]
    ks = np.array([r for r in results if r is not None])
    skipped = replicates - ks.size
    if ks.size == 0:
        raise TooFewPointsError("every bootstrap replicate was too small to refit")
    p = float(np.mean(ks >= fit.ks))
    return BootstrapResult(p, replicates, skipped, fit.ks, ks)


def bootstrap_pvalue(
    table: FrequencyTable,
    fit: PowerLawFit,
    replicates: int = 100,
    seed: int = 0,
    **kwargs,
) -> float:
    return bootstrap(table, fit, replicates, seed, **kwargs).p_value

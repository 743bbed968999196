"""Fibonacci binning, size-rank series and discrete power-law fitting."""

__version__ = "0.1.0"

from .binning import (
    BinInterval,
    BinnedSeries,
    bin_intervals,
    fibonacci,
    fibonacci_bin,
    power_of_b_bin,
    power_of_b_edges,
)
from .distribution import FrequencyTable, SizeRankSeries, from_pairs, size_rank, tally
from .plfit import (
    BootstrapResult,
    PowerLawFit,
    bootstrap,
    bootstrap_pvalue,
    ks_statistic,
    mle_alpha,
    scan_xmin,
)
from .samplers import (
    DiscreteExponential,
    DiscretePowerLaw,
    SampleSpec,
    sample,
    sample_exponential,
    sample_power_law,
)
from .zeta import hurwitz_zeta

"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line (see conftest) before asserting, so the
end-of-run summary lists every criterion even when some fail.
"""

import math
import subprocess
import sys
import time

import numpy as np
import pytest

from fibbin import (
    DiscreteExponential,
    DiscretePowerLaw,
    FrequencyTable,
    SampleSpec,
    bin_intervals,
    bootstrap,
    fibonacci_bin,
    hurwitz_zeta,
    sample,
    scan_xmin,
    size_rank,
    tally,
)

from oracles import assert_mass_conserved, fib_list, naive_fibonacci_bin, naive_tail_sums

SEED = 42
N_LARGE = 10**5
POWER_LAW = DiscretePowerLaw(2.5, 100)
EXPONENTIAL = DiscreteExponential(50, 1)


def random_table(rng, max_entries, max_x=10**6, integer=True, include_start=False):
    size = int(rng.integers(1, max_entries + 1))
    xs = np.unique(rng.integers(0, max_x + 1, size=size))
    s = int(xs[0]) - int(rng.integers(0, 3))
    if include_start:
        xs = np.unique(np.concatenate([[s, s + 1], xs]))
    if integer:
        ws = rng.integers(0, 10**6, size=xs.size).astype(float)
    else:
        ws = rng.random(xs.size) * 10.0 ** rng.uniform(-3, 6)
    ws[rng.integers(0, xs.size)] += 1.0
    return FrequencyTable(xs, ws, s)


def test_1_interval_extremes(criterion):
    start = time.perf_counter()
    iv = bin_intervals(1, 10**18)
    elapsed = time.perf_counter() - start
    extremes = [iv[0].left] + [b.right for b in iv]
    expected = fib_list(len(extremes) + 1)[1:]
    ok = extremes == expected and extremes[:8] == [1, 2, 3, 5, 8, 13, 21, 34] and elapsed < 1e-3
    criterion("1 interval extremes are consecutive Fibonacci numbers (s=1)", ok, f"{len(iv)} bins, {elapsed * 1e3:.3f} ms")
    assert ok


def test_2_first_two_bins_are_data_points(criterion):
    rng = np.random.default_rng(2)
    start = time.perf_counter()
    bad = 0
    for _ in range(1000):
        t = random_table(rng, 200, include_start=True)
        b = fibonacci_bin(t)
        s = t.offset
        if b.points[0] != (s, t.weights[0]) or b.points[1] != (s + 1, t.weights[1]):
            bad += 1
    elapsed = time.perf_counter() - start
    ok = bad == 0 and elapsed < 1.0
    criterion("2 first two bins equal the raw data points (1000 tables)", ok, f"{bad} mismatches, {elapsed:.2f} s")
    assert ok


def test_3_oracle_equivalence(criterion):
    rng = np.random.default_rng(3)
    start = time.perf_counter()
    worst_real = 0.0
    exact_int = True
    for i in range(500):
        integer = i % 2 == 0
        # log-uniform sizes keep the quadratic oracle affordable; every 50th table is full size
        max_entries = 10**4 if i % 50 == 0 else int(10 ** rng.uniform(0, 4))
        t = random_table(rng, max_entries, integer=integer)
        b = fibonacci_bin(t)
        c, m = naive_fibonacci_bin(t.abscissas, t.weights, t.offset)
        tails = size_rank(t).tail_sums
        ref_tails = naive_tail_sums(t.abscissas, t.weights)
        if not np.array_equal(b.centers, c):
            exact_int = False
        if integer:
            exact_int &= np.array_equal(b.means, m) and np.array_equal(tails, ref_tails)
        else:
            rel_m = np.max(np.abs(b.means - m) / np.maximum(np.abs(m), np.finfo(float).tiny))
            rel_t = np.max(np.abs(tails - ref_tails) / ref_tails)
            worst_real = max(worst_real, rel_m, rel_t)
    elapsed = time.perf_counter() - start
    ok = exact_int and worst_real <= 1e-12 and elapsed < 30
    criterion(
        "3 fibonacci_bin and size_rank match brute-force oracles (500 tables)",
        ok,
        f"integer exact={exact_int}, worst real rel err {worst_real:.2e}, {elapsed:.1f} s",
    )
    assert ok


def test_4_mass_conservation(criterion):
    rng = np.random.default_rng(4)
    start = time.perf_counter()
    failures = 0
    for _ in range(1000):
        t = random_table(rng, 300)
        try:
            assert_mass_conserved(fibonacci_bin(t), t)
        except AssertionError:
            failures += 1
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed < 5
    criterion("4 sum m_k F_k == sum y_i on integer tables (1000 tables)", ok, f"{failures} failures, {elapsed:.2f} s")
    assert ok


def _density_deviation(law, n, seed):
    t = tally(sample(SampleSpec(law, n, seed)))
    b = fibonacci_bin(t)
    expected_count = n * (law.sf(b.lefts) - law.sf(b.rights))
    sel = expected_count >= 100
    dev = np.abs(np.log(b.means[sel]) - np.log(n * law.pmf(b.centers[sel])))
    return dev, b.lefts[sel], b.rights[sel]


@pytest.mark.parametrize("name, law", [("power law alpha=2.5 xmin=100", POWER_LAW), ("exponential mean=50 xmin=1", EXPONENTIAL)])
def test_5_binning_tracks_generating_law(criterion, name, law):
    start = time.perf_counter()
    dev, lefts, rights = _density_deviation(law, N_LARGE, SEED)
    elapsed = time.perf_counter() - start
    worst = int(np.argmax(dev))
    ok = bool(np.all(dev <= 0.15)) and elapsed < 60
    criterion(
        f"5 Fibonacci binning tracks n*p(p_k), |ln ratio| <= 0.15 [{name}]",
        ok,
        f"{dev.size} bins, max {dev[worst]:.3f} in [{lefts[worst]}, {rights[worst]}) "
        f"(log10 {dev[worst] / math.log(10):.3f}), {elapsed:.1f} s",
    )
    assert ok


@pytest.mark.slow
def test_6_fit_recovery(criterion):
    start = time.perf_counter()
    t = tally(sample(SampleSpec(POWER_LAW, N_LARGE, SEED)))
    fit = scan_xmin(t)
    r = bootstrap(t, fit, replicates=100, seed=SEED)
    elapsed = time.perf_counter() - start
    ok = 2.4 <= fit.alpha <= 2.7 and 50 <= fit.xmin <= 200 and r.p_value >= 0.1 and elapsed < 300
    criterion(
        "6 power-law sample: alpha in [2.4, 2.7], xmin in [50, 200], p >= 0.1",
        ok,
        f"alpha={fit.alpha:.4f} xmin={fit.xmin} ks={fit.ks:.4g} p={r.p_value:.2f} skipped={r.skipped}, {elapsed:.0f} s",
    )
    assert ok


@pytest.mark.slow
def test_7_exponential_rejected(criterion):
    start = time.perf_counter()
    t = tally(sample(SampleSpec(EXPONENTIAL, 5 * 10**4, SEED)))
    fit = scan_xmin(t)
    r = bootstrap(t, fit, replicates=100, seed=SEED)
    elapsed = time.perf_counter() - start
    ok = r.p_value <= 0.05 and elapsed < 300
    criterion(
        "7 exponential sample: power law rejected, p <= 0.05",
        ok,
        f"alpha={fit.alpha:.3f} xmin={fit.xmin} p={r.p_value:.2f} skipped={r.skipped}, {elapsed:.0f} s",
    )
    assert ok


def test_8_zeta(criterion):
    rng = np.random.default_rng(8)
    start = time.perf_counter()
    rel2 = abs(hurwitz_zeta(2, 1) - math.pi**2 / 6) / (math.pi**2 / 6)
    worst = 0.0
    for _ in range(100):
        alpha = float(rng.uniform(1.01, 6.0))
        q = int(rng.integers(1, 10**4))
        diff = hurwitz_zeta(alpha, q) - hurwitz_zeta(alpha, q + 1)
        worst = max(worst, abs(diff - q**-alpha) / q**-alpha)
    elapsed = time.perf_counter() - start
    ok = rel2 <= 1e-10 and worst <= 1e-10 and elapsed < 1
    criterion("8 zeta(2,1) = pi^2/6 and telescoping identity (100 draws)", ok, f"{rel2:.1e}, worst {worst:.1e}, {elapsed:.3f} s")
    assert ok


def _run(args, stdin=b""):
    proc = subprocess.run([sys.executable, "-m", "fibbin.cli", *args], input=stdin, capture_output=True)
    assert proc.returncode == 0, proc.stderr.decode()
    return proc.stdout


def test_9_determinism(criterion, tmp_path):
    start = time.perf_counter()
    obs = _run(["sample", "--law", "powerlaw", "--alpha", "2.5", "--xmin", "100", "--n", "20000", "--seed", "42"])
    t = tally(np.array(obs.split(), dtype=np.int64))
    pairs = "".join(f"{x}\t{int(w)}\n" for x, w in t.entries).encode()
    (tmp_path / "raw.tsv").write_bytes(pairs)
    commands = [
        (["sample", "--law", "powerlaw", "--alpha", "2.5", "--xmin", "100", "--n", "20000", "--seed", "42"], b""),
        (["sample", "--law", "exponential", "--mean", "50", "--xmin", "1", "--n", "20000", "--seed", "42"], b""),
        (["bin", "--raw"], obs),
        (["bin", "--raw", "--base", "2"], obs),
        (["bin", "--drop-empty", "--header"], pairs),
        (["sizerank", "--raw"], obs),
        (["sizerank", "--raw", "--normalize"], obs),
        (["fit", "--raw", "--pvalue", "--replicates", "10", "--seed", "7"], obs),
        (["plot", "--layer", f"raw_dots:{tmp_path / 'raw.tsv'}:data", "--binned-line", "fib.tsv", "--image", "f.png"], b""),
    ]
    differing = [" ".join(a[:2]) for a, stdin in commands if _run(a, stdin) != _run(a, stdin)]
    elapsed = time.perf_counter() - start
    ok = not differing and elapsed < 60
    criterion("9 every subcommand is byte-identical across two runs", ok, f"{len(commands)} commands, {elapsed:.1f} s")
    assert ok

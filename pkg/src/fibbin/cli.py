"""Command-line interface.

    fibbin bin       [FILE] [--raw] [--offset S] [--base B] [--drop-empty]
    fibbin sizerank  [FILE] [--raw] [--normalize]
    fibbin sample    --law {powerlaw,exponential} (--alpha A | --mean M) --xmin X --n N --seed K
    fibbin fit       [FILE] [--raw] [--min-tail T] [--pvalue --replicates R --seed K] [--curve PATH]
    fibbin plot      --layer KIND:PATH[:LABEL] ... [--linear-x] [--linear-y] [--image PATH]

Exit status: 0 success, 1 usage error, 2 input-format error, 3 numeric or
domain error.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .binning import fibonacci_bin, power_of_b_bin
from .distribution import size_rank
from .errors import InputError, NumericError, OffsetError
from .plfit import MIN_TAIL, bootstrap, scan_xmin
from .plot import LAYER_KINDS, Layer, PlotSpec, render_gnuplot
from .samplers import DiscreteExponential, DiscretePowerLaw, SampleSpec, sample
from .tsv import format_number, read_input, write_tsv

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_NUMERIC = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@contextlib.contextmanager
def _open_in(path):
    if path in (None, "-"):
        yield sys.stdin, "<stdin>"
    else:
        try:
            f = open(path, encoding="utf-8")
        except OSError as e:
            raise InputError(f"cannot read {path}: {e.strerror}") from None
        with f:
            yield f, path


@contextlib.contextmanager
def _open_out(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            yield f


def _load_table(args):
    with _open_in(args.input) as (f, name):
        parsed = read_input(f, raw=True if args.raw else None, source=name)
    try:
        return parsed.table(args.offset)
    except OffsetError as e:
        raise InputError(f"--offset {args.offset}: {e}") from None


def _cmd_bin(args):
    table = _load_table(args)
    series = power_of_b_bin(table, args.base) if args.base is not None else fibonacci_bin(table)
    if args.drop_empty:
        series = series.nonempty()
    with _open_out(args.output) as out:
        write_tsv(out, series.points, ["center", "mean"] if args.header else None)


def _cmd_sizerank(args):
    table = _load_table(args)
    sr = size_rank(table)
    tails = sr.tail_sums / table.total if args.normalize else sr.tail_sums
    with _open_out(args.output) as out:
        write_tsv(out, zip(sr.abscissas.tolist(), tails.tolist()), ["x", "tail_sum"] if args.header else None)


def _cmd_sample(args):
    if args.law == "powerlaw":
        if args.alpha is None:
            raise UsageError("sample --law powerlaw requires --alpha")
        law = DiscretePowerLaw(args.alpha, 1 if args.xmin is None else args.xmin)
    else:
        if args.mean is None:
            raise UsageError("sample --law exponential requires --mean")
        law = DiscreteExponential(args.mean, 0 if args.xmin is None else args.xmin)
    values = sample(SampleSpec(law, args.n, args.seed))
    with _open_out(args.output) as out:
        out.write("".join(f"{v}\n" for v in values.tolist()))


def _model_curve(fit, x_max, points=200):
    law = DiscretePowerLaw(fit.alpha, fit.xmin)
    xs = np.unique(np.round(np.geomspace(fit.xmin, max(x_max, fit.xmin), points)).astype(np.int64))
    return zip(xs.tolist(), (fit.tail_count * law.pmf(xs)).tolist())


def _cmd_fit(args):
    table = _load_table(args)
    fit = scan_xmin(table, args.min_tail)
    result = None
    if args.pvalue:
        result = bootstrap(table, fit, args.replicates, args.seed, min_tail=args.min_tail, workers=args.workers)
        fit = fit.with_p_value(result.p_value)
    rows = [
        ("alpha", fit.alpha),
        ("xmin", fit.xmin),
        ("ks", fit.ks),
        ("tail", fit.tail_count),
        ("n", table.total),
    ]
    if result is not None:
        rows += [("p", result.p_value), ("replicates", result.replicates), ("skipped", result.skipped)]
    with _open_out(args.output) as out:
        for key, value in rows:
            out.write(f"{key}\t{format_number(value)}\n")
    if args.curve:
        with _open_out(args.curve) as out:
            write_tsv(out, _model_curve(fit, table.max_abscissa))


def _parse_layer(text):
    kind, sep, rest = text.partition(":")
    if not sep or not rest:
        raise UsageError(f"--layer {text!r}: expected KIND:PATH[:LABEL]")
    if kind not in LAYER_KINDS:
        raise UsageError(f"--layer {text!r}: unknown kind {kind!r} (choose from {', '.join(LAYER_KINDS)})")
    path, _, label = rest.partition(":")
    return Layer(kind, path, label)


def _cmd_plot(args):
    layers = [_parse_layer(t) for t in args.layer]
    for kind in LAYER_KINDS:
        for path in getattr(args, kind) or []:
            layers.append(Layer(kind, path, kind.replace("_", " ")))
    if not layers:
        raise UsageError("plot needs at least one --layer")
    spec = PlotSpec(
        tuple(layers),
        log_x=not args.linear_x,
        log_y=not args.linear_y,
        output=args.image,
        title=args.title or "",
        xlabel=args.xlabel,
        ylabel=args.ylabel,
    )
    with _open_out(args.output) as out:
        out.write(render_gnuplot(spec))


def _build_parser():
    p = _Parser(prog="fibbin", description="Fibonacci binning and power-law analysis of discrete heavy-tailed data.")
    p.add_argument("--version", action="version", version=f"fibbin {__version__}")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def data_cmd(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("input", nargs="?", default="-", help="input file ('-' for stdin)")
        sp.add_argument("--raw", action="store_true", help="input is one observation per line")
        sp.add_argument("--offset", type=int, default=None, help="starting offset s (default: smallest abscissa)")
        sp.add_argument("--header", action="store_true", help="write a header line")
        sp.add_argument("--output", "-o", default=None, help="output path (default stdout)")
        return sp

    sp = data_cmd("bin", "Fibonacci (or power-of-b) binning")
    sp.add_argument("--base", type=float, default=None, help="use power-of-B binning instead")
    sp.add_argument("--drop-empty", action="store_true", help="omit bins with zero mean")
    sp.set_defaults(func=_cmd_bin)

    sp = data_cmd("sizerank", "size-rank (tail sum) series")
    sp.add_argument("--normalize", action="store_true", help="divide tail sums by the total weight")
    sp.set_defaults(func=_cmd_sizerank)

    sp = sub.add_parser("sample", help="draw a seeded synthetic sample")
    sp.add_argument("--law", choices=["powerlaw", "exponential"], required=True)
    sp.add_argument("--alpha", type=float, help="power-law exponent (> 1)")
    sp.add_argument("--mean", type=float, help="exponential scale (> 0)")
    sp.add_argument("--xmin", type=int, help="smallest value (default 1 for powerlaw, 0 for exponential)")
    sp.add_argument("--n", type=int, required=True, help="sample size")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--output", "-o", default=None)
    sp.set_defaults(func=_cmd_sample)

    sp = data_cmd("fit", "fit a discrete power law (KS-minimising xmin, MLE alpha)")
    sp.add_argument("--min-tail", type=float, default=MIN_TAIL, help="smallest admissible tail weight")
    sp.add_argument("--pvalue", action="store_true", help="also compute a bootstrap p-value")
    sp.add_argument("--replicates", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0, help="bootstrap seed")
    sp.add_argument("--workers", type=int, default=1, help="bootstrap worker processes")
    sp.add_argument("--curve", default=None, help="write the fitted model curve (x, expected frequency) here")
    sp.set_defaults(func=_cmd_fit)

    sp = sub.add_parser("plot", help="emit a gnuplot script")
    sp.add_argument("--layer", action="append", default=[], help="KIND:PATH[:LABEL], KIND in " + ", ".join(LAYER_KINDS))
    for kind in LAYER_KINDS:
        sp.add_argument("--" + kind.replace("_", "-"), dest=kind, action="append", metavar="PATH")
    sp.add_argument("--linear-x", action="store_true", help="linear x axis (default log)")
    sp.add_argument("--linear-y", action="store_true", help="linear y axis (default log)")
    sp.add_argument("--image", default=None, help="figure file the script renders to (.png/.svg/.pdf/.eps)")
    sp.add_argument("--title", default=None)
    sp.add_argument("--xlabel", default="x")
    sp.add_argument("--ylabel", default="frequency")
    sp.add_argument("--output", "-o", default=None, help="script path (default stdout)")
    sp.set_defaults(func=_cmd_plot)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        args.func(args)
    except UsageError as e:
        print(f"fibbin: usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except NumericError as e:
        print(f"fibbin: numeric error: {e}", file=sys.stderr)
        return EXIT_NUMERIC
    except InputError as e:
        print(f"fibbin: input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as e:
        print(f"fibbin: {e}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

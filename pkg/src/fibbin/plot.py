"""Gnuplot script generation for frequency, binned, size-rank and model layers."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Optional

from .errors import InputError

LAYER_KINDS = ("raw_dots", "binned_line", "size_rank", "model_curve")

_STYLE = {
    "raw_dots": "with points pt 7 ps 0.5",
    "binned_line": "with linespoints pt 5 ps 0.8 lw 2",
    "size_rank": "with points pt 7 ps 0.5",
    "model_curve": "with lines lw 2 dt 2",
}

_TERMINALS = {
    ".png": "pngcairo size 800,600",
    ".svg": "svg size 800,600",
    ".pdf": "pdfcairo size 5in,3.75in",
    ".eps": "postscript eps enhanced color",
}


@dataclass(frozen=True)
class Layer:
    kind: str
    path: str
    label: str = ""

    def __post_init__(self):
        if self.kind not in LAYER_KINDS:
            raise InputError(f"unknown layer kind {self.kind!r}; expected one of {', '.join(LAYER_KINDS)}")


@dataclass(frozen=True)
class PlotSpec:
    layers: tuple[Layer, ...]
    log_x: bool = True
    log_y: bool = True
    output: Optional[str] = None
    title: str = ""
    xlabel: str = "x"
    ylabel: str = "frequency"
    extras: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not self.layers:
            raise InputError("a plot needs at least one layer")


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _using(spec: PlotSpec) -> str:
    # nonpositive values cannot be drawn on a log axis; 1/0 makes gnuplot skip the point
    xs = "($1>0?$1:1/0)" if spec.log_x else "1"
    ys = "($2>0?$2:1/0)" if spec.log_y else "2"
    return f"{xs}:{ys}"


def render_gnuplot(spec: PlotSpec) -> str:
    """Self-contained gnuplot script; data is read from the layer paths.

    Binned layers are drawn as connected points, raw and size-rank layers as
    bare points. Rows with nonpositive coordinates on a log axis are skipped.
    """
    out = ["# generated by fibbin", "reset"]
    if spec.output:
        ext = os.path.splitext(spec.output)[1].lower()
        term = _TERMINALS.get(ext)
        if term is None:
            raise InputError(f"cannot pick a gnuplot terminal for output {spec.output!r}")
        out.append(f"set terminal {term}")
        out.append(f"set output {_quote(spec.output)}")
    axes = ("x" if spec.log_x else "") + ("y" if spec.log_y else "")
    if axes:
        out.append(f"set logscale {axes}")
    out.append("set format x \"10^{%L}\"" if spec.log_x else "set format x \"%g\"")
    out.append("set format y \"10^{%L}\"" if spec.log_y else "set format y \"%g\"")
    out.append(f"set xlabel {_quote(spec.xlabel)}")
    out.append(f"set ylabel {_quote(spec.ylabel)}")
    if spec.title:
        out.append(f"set title {_quote(spec.title)}")
    out.append("set key top right")
    out.append("set datafile commentschars \"#\"")
    out.extend(spec.extras)
    using = _using(spec)
    parts = []
    for layer in spec.layers:
        title = f"title {_quote(layer.label)}" if layer.label else "notitle"
        parts.append(f"{_quote(layer.path)} using {using} {_STYLE[layer.kind]} {title}")
    out.append("plot " + ", \\\n     ".join(parts))
    if spec.output:
        out.append("unset output")
    return "\n".join(out) + "\n"

"""Reading whitespace-separated frequency data and writing byte-stable TSV."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import IO, Iterable, Optional, Sequence

from .distribution import FrequencyTable, from_pairs, tally
from .errors import InputError


class InputFormatError(InputError):
    def __init__(self, message, source="<stdin>", line=None):
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)
        self.source = source
        self.line = line


def format_number(v) -> str:
    """Integers (and integral floats below 2^53) in plain decimal, other reals as
    the shortest round-trip repr."""
    if isinstance(v, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(v, int):
        return str(v)
    v = float(v)
    if math.isfinite(v) and v == int(v) and abs(v) < 2**53:
        return str(int(v))
    return repr(v)


def write_tsv(out: IO[str], rows: Iterable[Sequence], header: Optional[Sequence[str]] = None):
    if header:
        out.write("\t".join(header) + "\n")
    for row in rows:
        out.write("\t".join(format_number(v) for v in row) + "\n")


@dataclass
class ParsedInput:
    """Either raw observations or (x, y) pairs, with source line numbers."""

    raw: Optional[list[int]] = None
    pairs: Optional[list[tuple[int, float]]] = None
    lines: Optional[list[int]] = None

    def table(self, offset: Optional[int] = None) -> FrequencyTable:
        if self.raw is not None:
            return tally(self.raw, offset)
        return from_pairs(self.pairs, offset)


def _parse_int(tok, source, lineno):
    try:
        return int(tok)
    except ValueError:
        pass
    try:
        f = float(tok)
    except ValueError:
        raise InputFormatError(f"expected an integer, got {tok!r}", source, lineno) from None
    if not math.isfinite(f) or f != int(f):
        raise InputFormatError(f"expected an integer, got {tok!r}", source, lineno)
    return int(f)


def _parse_weight(tok, source, lineno):
    try:
        f = float(tok)
    except ValueError:
        raise InputFormatError(f"expected a number, got {tok!r}", source, lineno) from None
    if not math.isfinite(f):
        raise InputFormatError(f"weight must be finite, got {tok!r}", source, lineno)
    if f < 0:
        raise InputFormatError(f"negative weight {tok}", source, lineno)
    return f


def read_input(stream: IO[str], raw: Optional[bool] = None, source: str = "<stdin>") -> ParsedInput:
    """Parse "x y" pair lines or single-column raw observations.

    ``raw=None`` picks the format from the first data line. Blank lines and
    lines starting with ``#`` are skipped.
    """
    values = []
    pairs = []
    lines = []
    seen = {}
    for lineno, line in enumerate(stream, start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        fields = text.split()
        if raw is None:
            raw = len(fields) == 1
        if raw:
            if len(fields) != 1:
                raise InputFormatError(f"expected one observation per line, got {len(fields)} fields", source, lineno)
            values.append(_parse_int(fields[0], source, lineno))
        else:
            if len(fields) != 2:
                raise InputFormatError(f"expected 'x y', got {len(fields)} fields", source, lineno)
            x = _parse_int(fields[0], source, lineno)
            y = _parse_weight(fields[1], source, lineno)
            if x in seen:
                raise InputFormatError(f"duplicate abscissa {x} (first seen on line {seen[x]})", source, lineno)
            seen[x] = lineno
            pairs.append((x, y))
        lines.append(lineno)
    if not lines:
        raise InputFormatError("no data lines", source)
    if raw:
        return ParsedInput(raw=values, lines=lines)
    return ParsedInput(pairs=pairs, lines=lines)

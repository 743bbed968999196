import io

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fibbin.errors import InputError
from fibbin.plot import Layer, PlotSpec, render_gnuplot
from fibbin.tsv import InputFormatError, format_number, read_input, write_tsv


@pytest.mark.parametrize(
    "value, text",
    [(3, "3"), (3.0, "3"), (5.5, "5.5"), (0.1, "0.1"), (1 / 3, "0.3333333333333333"), (-2.0, "-2"), (1e300, "1e+300")],
)
def test_format_number(value, text):
    assert format_number(value) == text


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_format_round_trips(v):
    assert float(format_number(v)) == v


def test_write_tsv():
    buf = io.StringIO()
    write_tsv(buf, [(1, 2.5), (3, 4.0)], ["x", "y"])
    assert buf.getvalue() == "x\ty\n1\t2.5\n3\t4\n"


def test_read_pairs_and_raw():
    p = read_input(io.StringIO("# c\n1 2.5\n\n 3\t4\n"))
    assert p.pairs == [(1, 2.5), (3, 4.0)] and p.lines == [2, 4]
    r = read_input(io.StringIO("5\n5\n2\n"))
    assert r.raw == [5, 5, 2]
    assert r.table().entries == [(2, 1.0), (5, 2.0)]


def test_raw_forced_rejects_pairs():
    with pytest.raises(InputFormatError, match=":1:"):
        read_input(io.StringIO("1 2\n"), raw=True)


def test_integer_written_as_float_accepted():
    assert read_input(io.StringIO("1e2 3\n")).pairs == [(100, 3.0)]


def test_gnuplot_script_structure():
    spec = PlotSpec(
        (Layer("raw_dots", "a.tsv", "raw"), Layer("binned_line", "b.tsv", 'say "hi"'), Layer("model_curve", "m.tsv")),
        output="fig.svg",
    )
    text = render_gnuplot(spec)
    lines = text.splitlines()
    assert lines[0].startswith("#")
    assert "set terminal svg size 800,600" in lines
    assert "set logscale xy" in lines
    assert 'title "say \\"hi\\""' in text
    assert text.count("with points") == 1
    assert text.count("with linespoints") == 1
    assert "notitle" in text
    assert text.endswith("unset output\n")


def test_log_y_only():
    text = render_gnuplot(PlotSpec((Layer("size_rank", "s.tsv"),), log_x=False))
    assert "set logscale y" in text.splitlines()
    assert "using 1:($2>0?$2:1/0)" in text


def test_plot_spec_validation():
    with pytest.raises(InputError):
        PlotSpec(())
    with pytest.raises(InputError):
        Layer("histogram", "x.tsv")
    with pytest.raises(InputError):
        render_gnuplot(PlotSpec((Layer("raw_dots", "a"),), output="fig.bmp"))

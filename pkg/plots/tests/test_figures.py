"""Smoke and contract tests for the trace figure renderer."""

import hashlib
import os

import numpy as np
import pytest

from traceplots import (
    FigureSpec,
    MissingColumnError,
    build_figure,
    load_trace,
    parse_spec_text,
    render,
)
from traceplots.cli import main as cli_main

DATA = os.path.join(os.path.dirname(__file__), "data")
GOLDEN_A = os.path.join(DATA, "golden-dynamic.csv")
GOLDEN_B = os.path.join(DATA, "golden-constant.csv")


def _read_bytes(path):
    with open(path, "rb") as fh:
        return fh.read()


@pytest.mark.parametrize("kind", ["scenario", "attainable-set", "comparison"])
@pytest.mark.parametrize("fmt", ["png", "svg"])
def test_golden_traces_render_every_kind(tmp_path, kind, fmt):
    out = str(tmp_path / f"{kind}.{fmt}")
    spec = FigureSpec(
        trace=GOLDEN_A,
        kind=kind,
        out=out,
        trace_b=GOLDEN_B if kind == "comparison" else None,
        format=fmt,
    )
    assert render(spec) == out
    assert os.path.getsize(out) > 0


def test_svg_output_contains_declared_series_labels(tmp_path):
    out = str(tmp_path / "scenario.svg")
    render(FigureSpec(trace=GOLDEN_A, kind="scenario", out=out, format="svg"))
    text = _read_bytes(out).decode()
    for label in (
        "reference angle",
        "measured angle",
        "FES share",
        "nominal net torque",
        "FES torque",
        "attainable FES band",
        "redistribution state 1",
    ):
        assert label in text


def test_missing_zeta_column_error_names_it(tmp_path):
    lines = _read_bytes(GOLDEN_A).decode().splitlines()
    header_idx = next(i for i, line in enumerate(lines) if not line.startswith("#"))
    header = lines[header_idx].split(",")
    drop = [header.index("zeta1"), header.index("zeta2")]
    keep = [i for i in range(len(header)) if i not in drop]
    trimmed = [lines[i] for i in range(header_idx)]
    for line in lines[header_idx:]:
        fields = line.split(",")
        trimmed.append(",".join(fields[i] for i in keep))
    path = tmp_path / "no-zeta.csv"
    path.write_text("\n".join(trimmed) + "\n")

    with pytest.raises(MissingColumnError, match="zeta1"):
        render(FigureSpec(trace=str(path), kind="scenario", out=str(tmp_path / "x.png")))


def test_rerender_is_idempotent_and_input_untouched(tmp_path):
    before = hashlib.sha256(_read_bytes(GOLDEN_A)).hexdigest()
    out = str(tmp_path / "band.png")
    spec = FigureSpec(trace=GOLDEN_A, kind="attainable-set", out=out)
    render(spec)
    first = _read_bytes(out)
    render(spec)
    assert _read_bytes(out) == first
    assert hashlib.sha256(_read_bytes(GOLDEN_A)).hexdigest() == before


def test_identical_traces_comparison_layers_coincide(tmp_path):
    spec = FigureSpec(
        trace=GOLDEN_A, kind="comparison", out=str(tmp_path / "cmp.png"), trace_b=GOLDEN_A
    )
    fig = build_figure(spec)
    try:
        for ax in fig.axes:
            lines = ax.get_lines()
            a, b = lines[-2], lines[-1]
            assert np.array_equal(a.get_xdata(), b.get_xdata())
            assert np.array_equal(a.get_ydata(), b.get_ydata())
    finally:
        import matplotlib.pyplot as plt

        plt.close(fig)


def test_reader_exposes_header_and_metadata():
    meta, cols = load_trace(GOLDEN_A)
    assert "scenario_hash" in meta
    assert meta["scenario_name"] == "golden-dynamic"
    assert len(cols["t_s"]) == len(cols["theta_deg"]) > 0


def test_spec_file_round_trip(tmp_path):
    out = str(tmp_path / "fig.svg")
    spec_path = tmp_path / "fig.spec"
    spec_path.write_text(
        "# comparison of the two golden traces\n"
        f"trace = {GOLDEN_A}\n"
        f"trace_b = {GOLDEN_B}\n"
        "kind = comparison\n"
        f"out = {out}\n"
        "format = svg\n"
    )
    assert cli_main([str(spec_path)]) == 0
    assert os.path.getsize(out) > 0


def test_cli_flags_and_error_paths(tmp_path, capsys):
    out = str(tmp_path / "fig.png")
    assert cli_main(["--trace", GOLDEN_A, "--kind", "attainable-set", "--out", out]) == 0
    assert os.path.getsize(out) > 0

    assert cli_main(["--trace", GOLDEN_A, "--kind", "comparison", "--out", out]) == 1
    assert "trace_b" in capsys.readouterr().err

    missing = str(tmp_path / "nope.csv")
    assert cli_main(["--trace", missing, "--kind", "scenario", "--out", out]) == 1


def test_bad_spec_values_rejected():
    with pytest.raises(ValueError, match="kind"):
        FigureSpec(trace=GOLDEN_A, kind="histogram", out="x.png")
    with pytest.raises(ValueError, match="format"):
        FigureSpec(trace=GOLDEN_A, kind="scenario", out="x.pdf", format="pdf")
    with pytest.raises(ValueError, match="missing required key"):
        parse_spec_text("trace = a.csv\nkind = scenario\n")

"""Figure construction and rendering for trace CSVs.

Three figure kinds:
  scenario        one trace: reference vs measured angle, FES share, nominal
                  net torque, and realized FES torque with the attainable
                  band shaded, plus the redistribution state.
  attainable-set  one trace: the per-tick attainable FES band with the
                  realized torque and saturation markers.
  comparison      two traces on the same reference: overlaid angles, tracking
                  error, and FES share.

Rendering is deterministic for fixed inputs and never touches the trace file
beyond reading it.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .reader import load_trace, require_columns

KINDS = ("scenario", "attainable-set", "comparison")
FORMATS = ("png", "svg")

_SCENARIO_COLUMNS = (
    "t_s",
    "theta_d_deg",
    "theta_deg",
    "alpha",
    "tau_net_nominal_Nm",
    "tau_fes_realized_Nm",
    "afes_upper_Nm",
    "afes_lower_Nm",
    "zeta1",
    "zeta2",
)
_BAND_COLUMNS = (
    "t_s",
    "tau_fes_realized_Nm",
    "afes_upper_Nm",
    "afes_lower_Nm",
    "sat_flexor",
    "sat_extensor",
)
_COMPARISON_COLUMNS = ("t_s", "theta_d_deg", "theta_deg", "alpha")


@dataclass(frozen=True)
class FigureSpec:
    """One figure: which trace(s), which layout, where the file goes."""

    trace: str
    kind: str
    out: str
    trace_b: str | None = None
    format: str = "png"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown figure kind '{self.kind}'; expected one of {KINDS}")
        if self.format not in FORMATS:
            raise ValueError(f"unknown format '{self.format}'; expected one of {FORMATS}")
        if self.kind == "comparison" and self.trace_b is None:
            raise ValueError("comparison kind needs a second trace (trace_b)")


def parse_spec_text(text: str) -> FigureSpec:
    """Parse a key = value spec file body into a FigureSpec."""
    fields: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"spec line {lineno}: expected 'key = value', got '{raw.strip()}'")
        key, value = (part.strip() for part in line.split("=", 1))
        fields[key] = value
    known = {"trace", "kind", "out", "trace_b", "format"}
    unknown = set(fields) - known
    if unknown:
        raise ValueError(f"unknown spec keys: {sorted(unknown)}")
    for required in ("trace", "kind", "out"):
        if required not in fields:
            raise ValueError(f"spec is missing required key '{required}'")
    return FigureSpec(
        trace=fields["trace"],
        kind=fields["kind"],
        out=fields["out"],
        trace_b=fields.get("trace_b"),
        format=fields.get("format", "png"),
    )


def load_spec(path: str) -> FigureSpec:
    with open(path) as fh:
        return parse_spec_text(fh.read())


def _title(meta: dict[str, str], fallback: str) -> str:
    return meta.get("scenario_name", fallback)


def _scenario_figure(spec: FigureSpec) -> plt.Figure:
    meta, cols = load_trace(spec.trace)
    require_columns(spec.trace, cols, _SCENARIO_COLUMNS)
    t = cols["t_s"]
    fig, axes = plt.subplots(4, 1, sharex=True, figsize=(8.0, 9.0))

    axes[0].plot(t, cols["theta_d_deg"], "k--", lw=1.0, label="reference angle")
    axes[0].plot(t, cols["theta_deg"], "C0-", lw=1.0, label="measured angle")
    axes[0].set_ylabel("angle [deg]")
    axes[0].legend(loc="upper right", fontsize=8)
    axes[0].set_title(_title(meta, os.path.basename(spec.trace)))

    axes[1].plot(t, cols["alpha"], "C2-", lw=1.0, label="FES share")
    axes[1].set_ylabel("share [-]")
    axes[1].set_ylim(-0.05, 1.05)
    axes[1].legend(loc="upper right", fontsize=8)

    axes[2].fill_between(
        t, cols["afes_lower_Nm"], cols["afes_upper_Nm"],
        color="C1", alpha=0.20, lw=0, label="attainable FES band",
    )
    axes[2].plot(t, cols["tau_net_nominal_Nm"], "k-", lw=1.0, label="nominal net torque")
    axes[2].plot(t, cols["tau_fes_realized_Nm"], "C3-", lw=1.0, label="FES torque")
    axes[2].set_ylabel("torque [Nm]")
    axes[2].legend(loc="upper right", fontsize=8)

    axes[3].plot(t, cols["zeta1"], "C4-", lw=1.0, label="redistribution state 1")
    axes[3].plot(t, cols["zeta2"], "C5-", lw=1.0, label="redistribution state 2")
    axes[3].set_ylabel("state [Nm]")
    axes[3].set_xlabel("time [s]")
    axes[3].legend(loc="upper right", fontsize=8)
    fig.align_ylabels(axes)
    return fig


def _attainable_set_figure(spec: FigureSpec) -> plt.Figure:
    meta, cols = load_trace(spec.trace)
    require_columns(spec.trace, cols, _BAND_COLUMNS)
    t = cols["t_s"]
    fig, ax = plt.subplots(figsize=(8.0, 4.0))
    ax.fill_between(
        t, cols["afes_lower_Nm"], cols["afes_upper_Nm"],
        color="C1", alpha=0.25, lw=0, label="attainable FES band",
    )
    ax.plot(t, cols["afes_upper_Nm"], "C1-", lw=0.8)
    ax.plot(t, cols["afes_lower_Nm"], "C1-", lw=0.8)
    ax.plot(t, cols["tau_fes_realized_Nm"], "C3-", lw=1.0, label="FES torque")
    saturated = (cols["sat_flexor"] > 0.5) | (cols["sat_extensor"] > 0.5)
    if np.any(saturated):
        ax.plot(
            t[saturated], cols["tau_fes_realized_Nm"][saturated],
            "rx", ms=4, label="saturation",
        )
    ax.set_xlabel("time [s]")
    ax.set_ylabel("torque [Nm]")
    ax.legend(loc="upper right", fontsize=8)
    ax.set_title(_title(meta, os.path.basename(spec.trace)))
    return fig


def _comparison_figure(spec: FigureSpec) -> plt.Figure:
    meta_a, cols_a = load_trace(spec.trace)
    meta_b, cols_b = load_trace(spec.trace_b)
    require_columns(spec.trace, cols_a, _COMPARISON_COLUMNS)
    require_columns(spec.trace_b, cols_b, _COMPARISON_COLUMNS)
    name_a = _title(meta_a, os.path.basename(spec.trace))
    name_b = _title(meta_b, os.path.basename(spec.trace_b))
    fig, axes = plt.subplots(3, 1, sharex=True, figsize=(8.0, 7.5))

    axes[0].plot(cols_a["t_s"], cols_a["theta_d_deg"], "k--", lw=1.0, label="reference angle")
    axes[0].plot(cols_a["t_s"], cols_a["theta_deg"], "C0-", lw=1.0, label=name_a)
    axes[0].plot(cols_b["t_s"], cols_b["theta_deg"], "C1-", lw=1.0, label=name_b)
    axes[0].set_ylabel("angle [deg]")
    axes[0].legend(loc="upper right", fontsize=8)
    axes[0].set_title(f"{name_a} vs {name_b}")

    axes[1].plot(
        cols_a["t_s"], cols_a["theta_d_deg"] - cols_a["theta_deg"],
        "C0-", lw=1.0, label=name_a,
    )
    axes[1].plot(
        cols_b["t_s"], cols_b["theta_d_deg"] - cols_b["theta_deg"],
        "C1-", lw=1.0, label=name_b,
    )
    axes[1].set_ylabel("tracking error [deg]")
    axes[1].legend(loc="upper right", fontsize=8)

    axes[2].plot(cols_a["t_s"], cols_a["alpha"], "C0-", lw=1.0, label=name_a)
    axes[2].plot(cols_b["t_s"], cols_b["alpha"], "C1-", lw=1.0, label=name_b)
    axes[2].set_ylabel("FES share [-]")
    axes[2].set_ylim(-0.05, 1.05)
    axes[2].set_xlabel("time [s]")
    axes[2].legend(loc="upper right", fontsize=8)
    fig.align_ylabels(axes)
    return fig


_BUILDERS = {
    "scenario": _scenario_figure,
    "attainable-set": _attainable_set_figure,
    "comparison": _comparison_figure,
}


def build_figure(spec: FigureSpec) -> plt.Figure:
    """Construct the matplotlib figure for a spec without writing a file."""
    return _BUILDERS[spec.kind](spec)


def render(spec: FigureSpec) -> str:
    """Render the figure to spec.out and return the output path."""
    fig = build_figure(spec)
    try:
        # pin SVG metadata so repeated renders are byte-identical
        metadata = {"Date": None} if spec.format == "svg" else None
        fig.savefig(spec.out, format=spec.format, dpi=120, metadata=metadata)
    finally:
        plt.close(fig)
    return spec.out

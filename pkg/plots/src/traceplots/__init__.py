"""Figure rendering for hybrid joint simulation trace CSVs."""

from .figures import FORMATS, KINDS, FigureSpec, build_figure, load_spec, parse_spec_text, render
from .reader import MissingColumnError, load_trace

__all__ = [
    "FORMATS",
    "KINDS",
    "FigureSpec",
    "MissingColumnError",
    "build_figure",
    "load_spec",
    "load_trace",
    "parse_spec_text",
    "render",
]

__version__ = "0.1.0"

"""Reader for simulation trace CSVs.

A trace file starts with ``#``-prefixed metadata lines (``# key: value``),
followed by a CSV header row and float data rows. The reader is model-free:
it exposes whatever columns the file declares and never modifies the file.
"""

from __future__ import annotations

import csv

import numpy as np


class MissingColumnError(ValueError):
    """A figure kind referenced a column the trace does not provide."""


def load_trace(path: str) -> tuple[dict[str, str], dict[str, np.ndarray]]:
    """Parse a trace CSV into (metadata, columns-by-name)."""
    meta: dict[str, str] = {}
    rows: list[list[str]] = []
    header: list[str] | None = None
    with open(path, newline="") as fh:
        for record in csv.reader(fh):
            if not record:
                continue
            if record[0].startswith("#"):
                text = ",".join(record).lstrip("#").strip()
                sep = "=" if "=" in text else ":"
                if sep in text:
                    key, value = text.split(sep, 1)
                    meta[key.strip()] = value.strip()
                continue
            if header is None:
                header = [name.strip() for name in record]
            else:
                rows.append(record)
    if header is None:
        raise ValueError(f"trace '{path}' has no CSV header row")
    data = np.asarray(rows, dtype=float) if rows else np.empty((0, len(header)))
    if data.shape[1] != len(header):
        raise ValueError(
            f"trace '{path}' has rows with {data.shape[1]} fields "
            f"but {len(header)} header columns"
        )
    return meta, {name: data[:, i] for i, name in enumerate(header)}


def require_columns(path: str, columns: dict[str, np.ndarray], names: tuple[str, ...]) -> None:
    """Raise MissingColumnError naming the first absent column."""
    for name in names:
        if name not in columns:
            raise MissingColumnError(
                f"trace '{path}' is missing required column '{name}'"
            )

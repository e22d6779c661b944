"""CSV ingestion for point files: one point per row, comma-separated.

An optional header row is detected by failing to parse as numbers. The
dimension is fixed by the first data row; parse errors name the offending
row.
"""

from __future__ import annotations

import csv
import math

import numpy as np


def read_points_csv(path: str) -> np.ndarray:
    rows: list[list[float]] = []
    dim = None
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        for lineno, cells in enumerate(reader, start=1):
            cells = [c.strip() for c in cells if c.strip() != ""]
            if not cells:
                continue
            try:
                vals = [float(c) for c in cells]
            except ValueError:
                if dim is None and lineno == 1:
                    continue  # header
                raise ValueError(
                    f"{path}: row {lineno}: non-numeric value in {cells!r}") from None
            for v in vals:
                if not math.isfinite(v):
                    raise ValueError(f"{path}: row {lineno}: non-finite coordinate {v!r}")
            if dim is None:
                dim = len(vals)
            elif len(vals) != dim:
                raise ValueError(
                    f"{path}: row {lineno}: expected {dim} coordinates, got {len(vals)}")
            rows.append(vals)
    if not rows:
        raise ValueError(f"{path}: no data rows")
    return np.array(rows, dtype=np.float64)


def write_points_csv(points, path: str) -> None:
    pts = np.asarray(points, dtype=np.float64)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        for row in pts:
            writer.writerow([repr(float(c)) for c in row])

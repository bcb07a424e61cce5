"""2D max-min filter over rectangular windows, rows then columns.

Max (and min) over a rectangle separates exactly into a column-wise
extremum of row-wise extrema, so the 2D filter is two passes of the 1D
wedge filter.  Output is "valid" style: no border padding, dimensions
shrink by ``w - 1`` per axis.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TextIO

import numpy as np

from .core import wedge_run

__all__ = ["Grid", "filter2d", "read_grid", "write_grid"]


@dataclass
class Grid:
    """Row-major rectangular grid of float64 values."""

    data: np.ndarray

    def __post_init__(self):
        self.data = np.ascontiguousarray(self.data, dtype=np.float64)
        if self.data.ndim != 2:
            raise ValueError(f"grid data must be 2-dimensional, got shape {self.data.shape}")
        if self.data.size == 0:
            raise ValueError("grid must be non-empty")

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]


def _rowwise(data: np.ndarray, w: int) -> tuple[np.ndarray, np.ndarray]:
    out_cols = data.shape[1] - w + 1
    omax = np.empty((data.shape[0], out_cols))
    omin = np.empty_like(omax)
    for r in range(data.shape[0]):
        series = wedge_run(np.ascontiguousarray(data[r]), w)
        omax[r] = series.max
        omin[r] = series.min
    return omax, omin


def filter2d(g: Grid, w_row: int, w_col: int) -> tuple[Grid, Grid]:
    """Extrema over every ``w_col x w_row`` rectangle of ``g``.

    ``w_row`` is the window width along a row (columns spanned), ``w_col``
    the height.  Entry ``(r, c)`` of each output covers the rectangle with
    top-left corner ``(r, c)``.
    """
    if not 1 <= w_row <= g.cols:
        raise ValueError(f"row window {w_row} out of range for {g.cols} columns")
    if not 1 <= w_col <= g.rows:
        raise ValueError(f"column window {w_col} out of range for {g.rows} rows")
    row_max, row_min = _rowwise(g.data, w_row)
    col_max, _ = _rowwise(np.ascontiguousarray(row_max.T), w_col)
    _, col_min = _rowwise(np.ascontiguousarray(row_min.T), w_col)
    return Grid(col_max.T), Grid(col_min.T)


def read_grid(f: TextIO) -> Grid:
    """Parse the plain-text grid format: "rows cols" then value rows."""
    header = f.readline().split()
    if len(header) != 2:
        raise ValueError("grid header must be 'rows cols'")
    try:
        rows, cols = int(header[0]), int(header[1])
    except ValueError as e:
        raise ValueError(f"bad grid header: {e}") from e
    if rows < 1 or cols < 1:
        raise ValueError(f"grid dimensions must be positive, got {rows}x{cols}")
    data = np.empty((rows, cols))
    for r in range(rows):
        fields = f.readline().split()
        if len(fields) != cols:
            raise ValueError(f"grid row {r + 1}: expected {cols} values, got {len(fields)}")
        try:
            data[r] = [float(v) for v in fields]
        except ValueError as e:
            raise ValueError(f"grid row {r + 1}: {e}") from e
    if np.isnan(data).any():
        raise ValueError("grid contains NaN; values must be totally ordered")
    return Grid(data)


def write_grid(g: Grid, f: TextIO) -> None:
    f.write(f"{g.rows} {g.cols}\n")
    for r in range(g.rows):
        f.write(" ".join(repr(float(v)) for v in g.data[r]))
        f.write("\n")

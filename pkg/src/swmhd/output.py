"""Plain-text CSV writers for snapshots, diagnostic series and EOC tables.

Every number is written with ``repr``-equivalent precision in scientific
notation, so identical results always produce byte-identical files.
"""
from __future__ import annotations

from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import IoError
from .mesh import Grid2D

SNAPSHOT_1D = ("x", "h", "v1", "v2", "B1", "B2")
SNAPSHOT_2D = ("x", "y", "h", "v1", "v2", "B1", "B2")
DIAGNOSTICS = ("t", "dt", "mass", "mom1", "mom2", "hB1", "hB2", "entropy")
CONVERGENCE = ("n", "e_h", "e_hv1", "e_hv2", "e_hB1", "e_hB2")


def format_number(value) -> str:
    # 17 significant digits round-trip any double
    return f"{float(value):.16e}"


def write_table(path, header: Sequence[str], rows: Iterable[Sequence]) -> Path:
    path = Path(path)
    lines = [",".join(header)]
    for row in rows:
        if len(row) != len(header):
            raise ValueError(f"row has {len(row)} entries, header has {len(header)}")
        lines.append(",".join(v if isinstance(v, str) else format_number(v) for v in row))
    try:
        with open(path, "w", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc
    return path


def write_snapshot(field, path) -> Path:
    """One row per cell: centre coordinates followed by primitive variables."""
    w = field.primitive
    grid = field.grid
    if isinstance(grid, Grid2D):
        X, Y = grid.mesh()
        cols = [X.ravel(), Y.ravel()] + [w[k].ravel() for k in range(5)]
        header = SNAPSHOT_2D
    else:
        cols = [grid.centers] + [w[k] for k in range(5)]
        header = SNAPSHOT_1D
    return write_table(path, header, zip(*cols))


def write_diagnostics(trace, path) -> Path:
    """``trace`` rows are ``(t, dt, integrals)`` as produced by ``integrate``."""
    rows = [(t, dt, *np.asarray(ints, dtype=float)) for t, dt, ints in trace]
    return write_table(path, DIAGNOSTICS, rows)


def write_convergence(table, path) -> Path:
    rows = [(str(n), *err) for n, err in zip(table.cells, table.errors)]
    return write_table(path, CONVERGENCE, rows)

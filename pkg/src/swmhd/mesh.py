"""Cell-centred grids: 1D regular/stretched and 2D regular Cartesian."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import BadGridSpec

Array = np.ndarray


@dataclass(frozen=True)
class Grid1D:
    x_min: float
    x_max: float
    widths: Array
    edges: Array = field(repr=False)
    centers: Array = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.widths)

    @property
    def shape(self) -> tuple:
        return (self.n,)

    @classmethod
    def from_widths(cls, x_min: float, x_max: float, widths) -> "Grid1D":
        widths = np.asarray(widths, dtype=float)
        if widths.ndim != 1 or len(widths) < 2 or np.any(widths <= 0):
            raise BadGridSpec("need at least two cells with positive widths")
        edges = x_min + np.concatenate([[0.0], np.cumsum(widths)])
        # pin the last edge so the cells tile the domain exactly
        edges[-1] = x_max
        centers = 0.5 * (edges[:-1] + edges[1:])
        return cls(float(x_min), float(x_max), widths, edges, centers)


@dataclass(frozen=True)
class Grid2D:
    x_min: float
    x_max: float
    y_min: float
    y_max: float
    nx: int
    ny: int

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / self.nx

    @property
    def dy(self) -> float:
        return (self.y_max - self.y_min) / self.ny

    @property
    def shape(self) -> tuple:
        return (self.nx, self.ny)

    @property
    def x_centers(self) -> Array:
        return self.x_min + (np.arange(self.nx) + 0.5) * self.dx

    @property
    def y_centers(self) -> Array:
        return self.y_min + (np.arange(self.ny) + 0.5) * self.dy

    def mesh(self):
        """Cell-centre coordinates as two ``(nx, ny)`` arrays."""
        return np.meshgrid(self.x_centers, self.y_centers, indexing="ij")

    @property
    def cell_area(self) -> float:
        return self.dx * self.dy


def _check_bounds(lo, hi, n, what="x"):
    if not (np.isfinite(lo) and np.isfinite(hi)) or hi <= lo:
        raise BadGridSpec(f"{what}_max must exceed {what}_min, got [{lo}, {hi}]")
    if int(n) != n or n < 2:
        raise BadGridSpec(f"need an integer cell count >= 2, got {n}")


def regular_grid_1d(x_min: float, x_max: float, n: int) -> Grid1D:
    _check_bounds(x_min, x_max, n)
    n = int(n)
    return Grid1D.from_widths(x_min, x_max, np.full(n, (x_max - x_min) / n))


def stretched_grid_1d(x_min: float, x_max: float, n: int, ratio: float) -> Grid1D:
    """Widths growing geometrically left to right with ``max/min == ratio``."""
    _check_bounds(x_min, x_max, n)
    if not ratio >= 1.0:
        raise BadGridSpec(f"stretching ratio must be >= 1, got {ratio}")
    n = int(n)
    if ratio == 1.0:
        return regular_grid_1d(x_min, x_max, n)
    growth = ratio ** (1.0 / (n - 1))
    widths = growth ** np.arange(n)
    widths *= (x_max - x_min) / widths.sum()
    return Grid1D.from_widths(x_min, x_max, widths)


def regular_grid_2d(bounds, nx: int, ny: int) -> Grid2D:
    """``bounds`` is ``((x_min, x_max), (y_min, y_max))``."""
    (x0, x1), (y0, y1) = bounds
    _check_bounds(x0, x1, nx, "x")
    _check_bounds(y0, y1, ny, "y")
    return Grid2D(float(x0), float(x1), float(y0), float(y1), int(nx), int(ny))

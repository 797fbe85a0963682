"""Conservation budgets, discrete L2 errors and convergence tables."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateTable, GridMismatch
from .mesh import Grid1D, Grid2D
from .physics import entropy, primitive_from_conserved

Array = np.ndarray

QUANTITIES = ("h", "hv1", "hv2", "hB1", "hB2", "U")
VARIABLES = QUANTITIES[:5]


def cell_weights(grid) -> Array:
    """Cell volumes, shaped like one component of the field."""
    if isinstance(grid, Grid2D):
        return np.full(grid.shape, grid.cell_area)
    return grid.widths


def domain_integrals(field, g: float = 1.0) -> Array:
    """Integrals of the five conserved variables and of the entropy.

    Cell data are piecewise constant, so any quadrature of them collapses to
    the volume-weighted sum.
    """
    u = field.u
    weights = cell_weights(field.grid)
    U = entropy(primitive_from_conserved(u), g)
    out = np.empty(6)
    for k in range(5):
        out[k] = np.sum(weights * u[k])
    out[5] = np.sum(weights * U)
    return out


@dataclass(frozen=True)
class ConservationReport:
    """Absolute change of each integral; ``signed`` keeps ``e(T) - e(0)``."""

    h: float
    hv1: float
    hv2: float
    hB1: float
    hB2: float
    U: float
    signed: tuple

    def as_array(self) -> Array:
        return np.array([self.h, self.hv1, self.hv2, self.hB1, self.hB2, self.U])


def _same_grid(a, b) -> bool:
    if type(a) is not type(b):
        return False
    if isinstance(a, Grid1D):
        return a.n == b.n and np.array_equal(a.widths, b.widths) and a.x_min == b.x_min
    return a == b


def conservation_error(initial, final, g: float = 1.0) -> ConservationReport:
    if not _same_grid(initial.grid, final.grid):
        raise GridMismatch("fields live on different grids")
    diff = domain_integrals(final, g) - domain_integrals(initial, g)
    return ConservationReport(*np.abs(diff), signed=tuple(diff))


def l2_error(field, exact, normalized: bool = False) -> Array:
    """Volume-weighted discrete L2 error per conserved variable.

    ``exact`` maps cell centres (and time) to conserved states: ``exact(x, t)``
    in 1D, ``exact(x, y, t)`` in 2D. With ``normalized`` the squared error is
    divided by the domain volume, giving an RMS-type value that does not
    depend on the domain size.
    """
    grid = field.grid
    if isinstance(grid, Grid2D):
        X, Y = grid.mesh()
        ref = exact(X, Y, field.t)
    else:
        ref = exact(grid.centers, field.t)
    weights = cell_weights(grid)
    if normalized:
        weights = weights / np.sum(weights)
    return l2_distance(field.u, ref, weights)


def l2_distance(a: Array, b: Array, weights: Array) -> Array:
    err = np.asarray(a) - np.asarray(b)
    return np.sqrt(np.sum(weights * err**2, axis=tuple(range(1, err.ndim))))


def project_to_grid(fine: Grid1D, values: Array, coarse: Grid1D) -> Array:
    """Exact cell averages of piecewise-constant ``values`` on ``coarse`` cells."""
    values = np.atleast_2d(values)
    out = np.zeros((values.shape[0], coarse.n))
    fe = fine.edges
    for j in range(coarse.n):
        lo, hi = coarse.edges[j], coarse.edges[j + 1]
        overlap = np.clip(np.minimum(fe[1:], hi) - np.maximum(fe[:-1], lo), 0.0, None)
        out[:, j] = values @ overlap / (hi - lo)
    return out


@dataclass
class ConvergenceTable:
    cells: list
    errors: Array  # (rows, 5)

    def __post_init__(self):
        self.cells = [int(n) for n in self.cells]
        self.errors = np.atleast_2d(np.asarray(self.errors, dtype=float))
        if len(self.cells) != self.errors.shape[0]:
            raise DegenerateTable("one error row is needed per resolution")
        if any(b <= a for a, b in zip(self.cells, self.cells[1:])):
            raise DegenerateTable("cell counts must increase strictly")


def pairwise_eoc(table: ConvergenceTable) -> Array:
    if len(table.cells) < 2:
        raise DegenerateTable("need at least two resolutions to estimate an order")
    e = table.errors
    n = np.asarray(table.cells, dtype=float)
    if np.any(e <= 0):
        raise DegenerateTable("errors must be positive to take logarithms")
    return np.log(e[:-1] / e[1:]) / np.log(n[1:] / n[:-1])[:, None]


def eoc(table: ConvergenceTable) -> Array:
    """Average experimental order of convergence per variable."""
    return pairwise_eoc(table).mean(axis=0)

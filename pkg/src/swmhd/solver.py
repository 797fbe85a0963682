"""Semi-discrete finite volume residuals and explicit time integration.

Cell data are conserved arrays of shape ``(5, n)`` on a :class:`Grid1D` or
``(5, nx, ny)`` on a :class:`Grid2D`. Every interface gets a two-point flux
and a Janhunen source vector; each adjacent cell takes half of the source.
"""
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field, replace
from typing import Callable, Optional, Sequence

import numpy as np

from .diagnostics import domain_integrals
from .eigensystem import directional_wave_speed, max_wave_speed
from .errors import BoundaryError, ConfigError, GridMismatch, NonPositiveDepth
from .fluxes import FluxKind, as_flux_kind, janhunen_interface_source, numerical_flux
from . import kernels
from .mesh import Grid1D, Grid2D
from .physics import Axis, check_depth, conserved_from_primitive, primitive_from_conserved

log = logging.getLogger(__name__)

Array = np.ndarray


class Boundary(enum.Enum):
    PERIODIC = "periodic"
    INFLOW_OUTFLOW = "inflow_outflow"


def as_boundary(bc) -> Boundary:
    if isinstance(bc, Boundary):
        return bc
    try:
        return Boundary(str(bc).lower())
    except ValueError:
        raise BoundaryError(f"unknown boundary condition {bc!r}") from None


# Carpenter & Kennedy (1994) five-stage, fourth-order, 2N-storage scheme.
LSRK_A = np.array([
    0.0,
    -567301805773.0 / 1357537059087.0,
    -2404267990393.0 / 2016746695238.0,
    -3550918686646.0 / 2091501179385.0,
    -1275806237668.0 / 842570457699.0,
])
LSRK_B = np.array([
    1432997174477.0 / 9575080441755.0,
    5161836677717.0 / 13612068292357.0,
    1720146321549.0 / 2090206949498.0,
    3134564353537.0 / 4481467310338.0,
    2277821191437.0 / 14882151754819.0,
])
LSRK_C = np.array([
    0.0,
    1432997174477.0 / 9575080441755.0,
    2526269341429.0 / 6820363962896.0,
    2006345519317.0 / 3224310063776.0,
    2802321613138.0 / 2924317926251.0,
])


@dataclass(frozen=True)
class RKScheme:
    a: Array = field(default_factory=lambda: LSRK_A.copy())
    b: Array = field(default_factory=lambda: LSRK_B.copy())
    c: Array = field(default_factory=lambda: LSRK_C.copy())

    @property
    def stages(self) -> int:
        return len(self.b)


@dataclass(frozen=True)
class SolverConfig:
    """Run parameters.

    ``forcing`` is an optional callable ``(x, t) -> (5, n)`` (or
    ``(x, y, t)`` in 2D) added to the conserved-variable rates, used by the
    manufactured solution. ``bottom`` holds per-cell topography values.
    ``backend`` picks the compiled kernels or the plain numpy reference path;
    both assemble the same residual.
    """

    flux: FluxKind = FluxKind.ES1
    cfl: float = 0.5
    t_final: float = 0.0
    bc: Boundary = Boundary.PERIODIC
    g: float = 1.0
    bottom: Optional[Array] = None
    forcing: Optional[Callable] = None
    backend: str = "numba"

    def __post_init__(self):
        if self.backend not in ("numba", "numpy"):
            raise ConfigError(f"backend must be 'numba' or 'numpy', got {self.backend!r}")
        object.__setattr__(self, "flux", as_flux_kind(self.flux))
        object.__setattr__(self, "bc", as_boundary(self.bc))
        if not (0.0 < self.cfl <= 1.5):
            raise ConfigError(f"cfl must lie in (0, 1.5], got {self.cfl}")
        if not self.t_final >= 0.0:
            raise ConfigError(f"t_final must be non-negative, got {self.t_final}")
        if not self.g > 0.0:
            raise ConfigError(f"g must be positive, got {self.g}")


@dataclass(frozen=True)
class SolutionField:
    grid: object
    u: Array
    t: float = 0.0

    def __post_init__(self):
        u = np.asarray(self.u, dtype=float)
        if u.shape != (5,) + tuple(self.grid.shape):
            raise GridMismatch(f"field shape {u.shape} does not match grid {self.grid.shape}")
        object.__setattr__(self, "u", u)

    @classmethod
    def from_primitive(cls, grid, w, t: float = 0.0) -> "SolutionField":
        return cls(grid, conserved_from_primitive(w), t)

    @property
    def primitive(self) -> Array:
        return primitive_from_conserved(self.u)

    def with_state(self, u: Array, t: float) -> "SolutionField":
        return replace(self, u=u, t=t)


def apply_boundary(values: Array, bc, axis: int = -1) -> Array:
    """Pad ``values`` with one ghost layer on each side along ``axis``."""
    bc = as_boundary(bc)
    values = np.asarray(values)
    axis = axis % values.ndim
    first = np.take(values, [0], axis=axis)
    last = np.take(values, [-1], axis=axis)
    if bc is Boundary.PERIODIC:
        return np.concatenate([last, values, first], axis=axis)
    return np.concatenate([first, values, last], axis=axis)


def _bottom_rate(h_pad, b_pad, g, width, axis):
    """Well-balanced topography term for the normal momentum, per cell."""
    lo = [slice(None)] * h_pad.ndim
    hi = [slice(None)] * h_pad.ndim
    lo[axis] = slice(None, -1)
    hi[axis] = slice(1, None)
    lo, hi = tuple(lo), tuple(hi)
    face = 0.5 * (h_pad[lo] + h_pad[hi]) * (b_pad[hi] - b_pad[lo])
    return -g / (2.0 * width) * (face[lo] + face[hi])


def _compiled_rhs(u, grid, config):
    u = np.ascontiguousarray(u, dtype=float)
    out = np.empty_like(u)
    periodic = config.bc is Boundary.PERIODIC
    kind = kernels.KIND_CODES[config.flux.value]
    if isinstance(grid, Grid2D):
        ok = kernels.rhs_2d(u, grid.dx, grid.dy, periodic, kind, config.g, out)
    else:
        ok = kernels.rhs_1d(u, grid.widths, periodic, kind, config.g, out)
    if not ok:
        check_depth(u[0])
    return out


def semidiscrete_rhs_1d(u: Array, grid: Grid1D, config: SolverConfig, t: float = 0.0) -> Array:
    if config.backend == "numba":
        rhs = _compiled_rhs(u, grid, config)
        return _add_sources_1d(rhs, u, grid, config, t)
    w = primitive_from_conserved(u)
    w_pad = apply_boundary(w, config.bc)
    dx = grid.widths
    dx_pad = apply_boundary(dx, config.bc)

    wl, wr = w_pad[:, :-1], w_pad[:, 1:]
    flux = numerical_flux(config.flux, wl, wr, config.g, Axis.X)
    source = janhunen_interface_source(wl, wr, dx_pad[:-1], dx_pad[1:], Axis.X)

    rhs = (flux[:, :-1] - flux[:, 1:]) / dx + 0.5 * (source[:, :-1] + source[:, 1:])
    return _add_sources_1d(rhs, u, grid, config, t)


def _add_sources_1d(rhs, u, grid, config, t):
    if config.bottom is not None:
        h_pad = apply_boundary(u[0], config.bc)
        b_pad = apply_boundary(np.asarray(config.bottom, dtype=float), config.bc)
        rhs[1] += _bottom_rate(h_pad, b_pad, config.g, grid.widths, 0)
    if config.forcing is not None:
        rhs += config.forcing(grid.centers, t)
    return rhs


def semidiscrete_rhs_2d(u: Array, grid: Grid2D, config: SolverConfig, t: float = 0.0) -> Array:
    if config.backend == "numba":
        return _add_sources_2d(_compiled_rhs(u, grid, config), u, grid, config, t)
    w = primitive_from_conserved(u)
    g = config.g

    wx = apply_boundary(w, config.bc, axis=1)
    wl, wr = wx[:, :-1, :], wx[:, 1:, :]
    fx = numerical_flux(config.flux, wl, wr, g, Axis.X)
    sx = janhunen_interface_source(wl, wr, grid.dx, grid.dx, Axis.X)

    wy = apply_boundary(w, config.bc, axis=2)
    wb, wt = wy[:, :, :-1], wy[:, :, 1:]
    fy = numerical_flux(config.flux, wb, wt, g, Axis.Y)
    sy = janhunen_interface_source(wb, wt, grid.dy, grid.dy, Axis.Y)

    rhs = (fx[:, :-1, :] - fx[:, 1:, :]) / grid.dx
    rhs += (fy[:, :, :-1] - fy[:, :, 1:]) / grid.dy
    rhs += 0.5 * (sx[:, :-1, :] + sx[:, 1:, :])
    rhs += 0.5 * (sy[:, :, :-1] + sy[:, :, 1:])
    return _add_sources_2d(rhs, u, grid, config, t)


def _add_sources_2d(rhs, u, grid, config, t):
    g = config.g
    if config.bottom is not None:
        b = np.asarray(config.bottom, dtype=float)
        hx = apply_boundary(u[0], config.bc, axis=0)
        hy = apply_boundary(u[0], config.bc, axis=1)
        rhs[1] += _bottom_rate(hx, apply_boundary(b, config.bc, axis=0), g, grid.dx, 0)
        rhs[2] += _bottom_rate(hy, apply_boundary(b, config.bc, axis=1), g, grid.dy, 1)
    if config.forcing is not None:
        X, Y = grid.mesh()
        rhs += config.forcing(X, Y, t)
    return rhs


def semidiscrete_rhs(u: Array, grid, config: SolverConfig, t: float = 0.0) -> Array:
    if isinstance(grid, Grid2D):
        return semidiscrete_rhs_2d(u, grid, config, t)
    return semidiscrete_rhs_1d(u, grid, config, t)


def compute_timestep(field: SolutionField, config: SolverConfig) -> float:
    """Stable explicit step, clipped so the run ends exactly at ``t_final``."""
    w = field.primitive
    grid = field.grid
    if isinstance(grid, Grid2D):
        rate = (directional_wave_speed(w, config.g, Axis.X) / grid.dx
                + directional_wave_speed(w, config.g, Axis.Y) / grid.dy)
        dt = config.cfl / np.max(rate)
    else:
        dt = config.cfl * np.min(grid.widths) / np.max(max_wave_speed(w, config.g))
    remaining = config.t_final - field.t
    if dt >= remaining or remaining - dt <= 1e-12 * dt:
        dt = remaining
    return float(dt)


def lsrk_step(field: SolutionField, dt: float, config: SolverConfig,
              scheme: RKScheme = RKScheme(), rhs=None) -> SolutionField:
    """Advance one step with the 2N-storage Runge-Kutta scheme."""
    if rhs is None:
        rhs = semidiscrete_rhs
    u = field.u.copy()
    k = np.zeros_like(u)
    for a, b, c in zip(scheme.a, scheme.b, scheme.c):
        try:
            k = a * k + dt * rhs(u, field.grid, config, field.t + c * dt)
        except NonPositiveDepth as exc:
            raise NonPositiveDepth(f"positivity lost during stage at t={field.t:.6g}: {exc}") from None
        u += b * k
    check_depth(u[0])
    return field.with_state(u, field.t + dt)


@dataclass
class IntegrationResult:
    field: SolutionField
    trace: list  # rows of (t, dt, integrals)

    @property
    def steps(self) -> int:
        return max(len(self.trace) - 1, 0)


def integrate(field: SolutionField, config: SolverConfig,
              callbacks: Sequence[Callable] = (), record: bool = True,
              max_steps: int = 10_000_000) -> IntegrationResult:
    """March ``field`` to ``config.t_final``.

    Each callback is called as ``cb(field, dt)`` after every accepted step.
    With ``record`` the trace holds ``(t, dt, domain_integrals)`` per step,
    starting with the initial state (``dt = 0``).
    """
    if config.t_final < field.t:
        raise ConfigError(f"t_final={config.t_final} precedes current time {field.t}")
    trace = []
    if record:
        trace.append((field.t, 0.0, domain_integrals(field, config.g)))
    steps = 0
    while field.t < config.t_final:
        remaining = config.t_final - field.t
        dt = compute_timestep(field, config)
        field = lsrk_step(field, dt, config)
        if dt >= remaining:
            field = field.with_state(field.u, config.t_final)
        steps += 1
        if record:
            trace.append((field.t, dt, domain_integrals(field, config.g)))
        for cb in callbacks:
            cb(field, dt)
        if steps >= max_steps:
            raise RuntimeError(f"exceeded {max_steps} steps before t_final")
    log.debug("integrated to t=%g in %d steps", field.t, steps)
    return IntegrationResult(field, trace)

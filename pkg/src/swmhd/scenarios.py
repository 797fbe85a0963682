"""Benchmark problems and the drivers that run them.

Three scenarios are provided: a smooth periodic manufactured solution for
convergence studies, the strong 1D Riemann problem, and a 2D rotor.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .diagnostics import ConvergenceTable, conservation_error, eoc, l2_error
from .errors import ConfigError, DegenerateTable
from .fluxes import FluxKind, as_flux_kind
from .mesh import regular_grid_1d, regular_grid_2d, stretched_grid_1d
from .physics import stack_vector
from .solver import Boundary, SolutionField, SolverConfig, as_boundary, integrate

log = logging.getLogger(__name__)

SCENARIOS = ("manufactured", "riemann", "rotor")

RIEMANN_LEFT = np.array([1.0, 0.0, 0.0, 1.0, 0.0])
RIEMANN_RIGHT = np.array([2.0, 0.0, 0.0, 0.5, 1.0])
ROTOR_RADIUS = 0.1


def manufactured_exact(x, t):
    """Conserved state of the travelling sine wave at ``(x, t)``."""
    s = np.sin(2.0 * np.pi * (np.asarray(x, dtype=float) - t))
    one = np.ones_like(s)
    return stack_vector([2.0 + s, 2.0 + s, 2.0 + s, one, 4.0 + 2.0 * s])


def manufactured_source(x, t, g: float = 1.0):
    """Forcing that makes :func:`manufactured_exact` solve the balance law."""
    phase = 2.0 * np.pi * (np.asarray(x, dtype=float) - t)
    h = 2.0 + np.sin(phase)
    out = np.zeros((5,) + h.shape)
    out[1] = 2.0 * np.pi * np.cos(phase) * (g * h + 1.0 / (h * h))
    return out


def riemann_ic(x):
    """Primitive state of the strong Riemann problem (left state for x <= 0)."""
    x = np.asarray(x, dtype=float)
    left = x <= 0.0
    return np.where(left, RIEMANN_LEFT.reshape((5,) + (1,) * x.ndim),
                    RIEMANN_RIGHT.reshape((5,) + (1,) * x.ndim))


def rotor_ic(x, y):
    """Primitive state of the rotor: a dense spinning disc in a uniform field.

    Points exactly on the disc edge get the outer state.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    x, y = np.broadcast_arrays(x, y)
    inside = np.hypot(x, y) < ROTOR_RADIUS
    zero = np.zeros_like(x)
    return stack_vector([
        np.where(inside, 10.0, 1.0),
        np.where(inside, -y, 0.0),
        np.where(inside, x, 0.0),
        np.where(inside, 0.1, 1.0),
        zero,
    ])


@dataclass(frozen=True)
class ScenarioSpec:
    scenario: str = "riemann"
    flux: FluxKind = FluxKind.ES1
    cells: int = 100
    cells_y: Optional[int] = None
    grid: str = "regular"
    ratio: float = 4.0
    cfl: Optional[float] = None
    t_final: Optional[float] = None
    bc: Optional[Boundary] = None
    g: float = 1.0
    out: Optional[str] = None

    def __post_init__(self):
        if self.scenario not in SCENARIOS:
            raise ConfigError(f"unknown scenario {self.scenario!r}; choose from {SCENARIOS}")
        try:
            object.__setattr__(self, "flux", as_flux_kind(self.flux))
        except ValueError:
            raise ConfigError(f"unknown flux {self.flux!r}") from None
        if self.bc is not None:
            try:
                object.__setattr__(self, "bc", as_boundary(self.bc))
            except ValueError as exc:
                raise ConfigError(str(exc)) from None
        if self.grid not in ("regular", "stretched"):
            raise ConfigError(f"grid must be 'regular' or 'stretched', got {self.grid!r}")
        if self.scenario == "rotor" and self.grid != "regular":
            raise ConfigError("the rotor runs on a regular 2D grid only")

    @property
    def is_2d(self) -> bool:
        return self.scenario == "rotor"

    # per-scenario defaults, used when a field is left unset
    def resolved(self) -> "ScenarioSpec":
        defaults = {
            "manufactured": dict(cfl=0.05, t_final=2.0, bc=Boundary.PERIODIC),
            "riemann": dict(cfl=0.1, t_final=0.4, bc=Boundary.INFLOW_OUTFLOW),
            "rotor": dict(cfl=0.5, t_final=0.2, bc=Boundary.INFLOW_OUTFLOW),
        }[self.scenario]
        updates = {k: v for k, v in defaults.items() if getattr(self, k) is None}
        if self.is_2d and self.cells_y is None:
            updates["cells_y"] = self.cells
        return replace(self, **updates)


def build_grid(spec: ScenarioSpec):
    if spec.is_2d:
        return regular_grid_2d(((-1.0, 1.0), (-1.0, 1.0)), spec.cells, spec.cells_y or spec.cells)
    if spec.grid == "stretched":
        return stretched_grid_1d(-1.0, 1.0, spec.cells, spec.ratio)
    return regular_grid_1d(-1.0, 1.0, spec.cells)


def build_problem(spec: ScenarioSpec):
    """Initial field and solver configuration for ``spec``."""
    spec = spec.resolved()
    grid = build_grid(spec)
    forcing = None
    if spec.scenario == "manufactured":
        field0 = SolutionField(grid, manufactured_exact(grid.centers, 0.0))
        g = spec.g

        def forcing(x, t):
            return manufactured_source(x, t, g)
    elif spec.scenario == "riemann":
        field0 = SolutionField.from_primitive(grid, riemann_ic(grid.centers))
    else:
        X, Y = grid.mesh()
        field0 = SolutionField.from_primitive(grid, rotor_ic(X, Y))
    config = SolverConfig(flux=spec.flux, cfl=spec.cfl, t_final=spec.t_final,
                          bc=spec.bc, g=spec.g, forcing=forcing)
    return field0, config


@dataclass
class RunResult:
    spec: ScenarioSpec
    initial: SolutionField
    final: SolutionField
    trace: list
    errors: Optional[np.ndarray] = None

    @property
    def conservation(self):
        return conservation_error(self.initial, self.final, self.spec.g)


def simulate(spec: ScenarioSpec, callbacks: Sequence = ()) -> RunResult:
    spec = spec.resolved()
    field0, config = build_problem(spec)
    log.info("running %s with %s flux on %s cells", spec.scenario, spec.flux.value, field0.grid.shape)
    result = integrate(field0, config, callbacks=callbacks)
    errors = None
    if spec.scenario == "manufactured":
        errors = l2_error(result.field, manufactured_exact)
    return RunResult(spec, field0, result.field, result.trace, errors)


def run(spec: ScenarioSpec) -> RunResult:
    """Simulate ``spec`` and write its outputs under ``spec.out`` (if set)."""
    from .output import write_diagnostics, write_snapshot

    result = simulate(spec)
    if spec.out:
        out = Path(spec.out)
        out.mkdir(parents=True, exist_ok=True)
        write_snapshot(result.final, out / "snapshot.csv")
        write_diagnostics(result.trace, out / "diagnostics.csv")
    return result


def convergence_driver(spec: ScenarioSpec, cells: Sequence[int]) -> ConvergenceTable:
    """Run ``spec`` at each resolution and collect L2 errors."""
    cells = [int(n) for n in cells]
    if len(cells) < 2:
        raise DegenerateTable("a convergence study needs at least two resolutions")
    if any(b != 2 * a for a, b in zip(cells, cells[1:])):
        raise DegenerateTable(f"resolutions must double each time, got {cells}")
    if spec.scenario != "manufactured":
        raise ConfigError("convergence studies need the manufactured solution")
    rows = []
    for n in cells:
        result = simulate(replace(spec, cells=n))
        rows.append(result.errors)
        log.info("n=%d errors=%s", n, result.errors)
    table = ConvergenceTable(cells, np.array(rows))
    if spec.out:
        from .output import write_convergence

        out = Path(spec.out)
        out.mkdir(parents=True, exist_ok=True)
        write_convergence(table, out / "convergence.csv")
    return table


def average_eoc(spec: ScenarioSpec, cells: Sequence[int]):
    table = convergence_driver(spec, cells)
    return table, eoc(table)

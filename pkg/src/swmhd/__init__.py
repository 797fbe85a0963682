"""Entropy stable finite volume solver for shallow water MHD."""
from .errors import (BadGridSpec, BoundaryError, ConfigError, DegenerateTable, GridMismatch,
                     IoError, NonPositiveDepth, SWMHDError)
from .physics import (Axis, conserved_from_primitive, entropy, entropy_variables,
                      physical_flux, primitive_from_conserved)
from .eigensystem import max_wave_speed, scaled_eigensystem, wave_speeds
from .fluxes import FluxKind, ec_flux, es1_flux, es2_flux, janhunen_interface_source, numerical_flux
from .mesh import Grid1D, Grid2D, regular_grid_1d, regular_grid_2d, stretched_grid_1d
from .solver import (Boundary, SolutionField, SolverConfig, compute_timestep, integrate,
                     lsrk_step, semidiscrete_rhs)
from .diagnostics import ConvergenceTable, conservation_error, domain_integrals, eoc, l2_error
from .scenarios import ScenarioSpec, convergence_driver, run, simulate

__version__ = "0.1.0"

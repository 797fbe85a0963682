"""Command-line driver.

Settings come from three layers, later ones winning: built-in defaults, an
optional flat ``key = value`` config file, and command-line flags. Exit
status is 0 on success, 1 for configuration (or output) problems and 2 when
the solver itself fails.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .errors import (BadGridSpec, BoundaryError, ConfigError, DegenerateTable, IoError,
                     NonPositiveDepth, SWMHDError)
from .scenarios import SCENARIOS, ScenarioSpec, average_eoc, run

log = logging.getLogger("swmhd")

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_SOLVER = 2

# config key -> (converter, ScenarioSpec field)
KEYS = {
    "scenario": (str, "scenario"),
    "flux": (str, "flux"),
    "cells": (int, "cells"),
    "cells_y": (int, "cells_y"),
    "cfl": (float, "cfl"),
    "tfinal": (float, "t_final"),
    "bc": (str, "bc"),
    "grid": (str, "grid"),
    "ratio": (float, "ratio"),
    "g": (float, "g"),
    "out": (str, "out"),
    "convergence": (str, None),
}


def read_config(path) -> dict:
    """Parse a flat ``key = value`` file; ``#`` starts a comment."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from None
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        key = key.lower().replace("-", "_")
        if key not in KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        values[key] = value
    return values


def _convert(key, value):
    conv = KEYS[key][0]
    try:
        return conv(value)
    except (TypeError, ValueError):
        raise ConfigError(f"bad value for {key}: {value!r}") from None


def parse_cells(text: str) -> list:
    try:
        cells = [int(c) for c in str(text).replace(" ", "").split(",") if c]
    except ValueError:
        raise ConfigError(f"cell list must be comma-separated integers, got {text!r}") from None
    return cells


class _Parser(argparse.ArgumentParser):
    # bad flags are configuration errors, not solver failures
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="swmhd", description="Entropy stable shallow water MHD solver")
    p.add_argument("config", nargs="?", help="optional key = value config file")
    p.add_argument("--scenario", help=", ".join(SCENARIOS))
    p.add_argument("--flux", help="ec, es1 or es2")
    p.add_argument("--cells", type=int, help="cells per direction")
    p.add_argument("--cells-y", dest="cells_y", type=int, help="rotor cells in y (default: --cells)")
    p.add_argument("--cfl", type=float)
    p.add_argument("--tfinal", type=float)
    p.add_argument("--bc", help="periodic or inflow_outflow")
    p.add_argument("--grid", help="regular or stretched")
    p.add_argument("--ratio", type=float, help="max/min cell width on stretched grids")
    p.add_argument("--g", type=float, help="gravitational constant")
    p.add_argument("--out", help="output directory")
    p.add_argument("--convergence", metavar="N1,N2,...",
                   help="run a convergence study over these cell counts")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def resolve_settings(args: argparse.Namespace) -> dict:
    settings = {}
    if args.config:
        settings.update(read_config(args.config))
    for key in KEYS:
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
    return {key: _convert(key, value) for key, value in settings.items()}


def spec_from_settings(settings: dict) -> ScenarioSpec:
    fields = {KEYS[k][1]: v for k, v in settings.items() if KEYS[k][1] is not None}
    try:
        return ScenarioSpec(**fields)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(str(exc)) from None


def _report_run(result):
    rep = result.conservation
    print(f"{result.spec.scenario} {result.spec.flux.value}: t = {result.final.t:.6g}, "
          f"steps = {len(result.trace) - 1}")
    for name, value in zip(("mass", "mom1", "mom2", "hB1", "hB2", "entropy"), rep.signed):
        print(f"  delta {name:8s} {value: .6e}")
    if result.errors is not None:
        print("  L2 error " + " ".join(f"{e:.6e}" for e in result.errors))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        settings = resolve_settings(args)
        spec = spec_from_settings(settings)
        if "convergence" in settings:
            table, orders = average_eoc(spec, parse_cells(settings["convergence"]))
            for n, err in zip(table.cells, table.errors):
                print(f"{n:6d} " + " ".join(f"{e:.6e}" for e in err))
            print("avg EOC " + " ".join(f"{o:.2f}" for o in orders))
        else:
            _report_run(run(spec))
    except (ConfigError, BadGridSpec, BoundaryError, DegenerateTable, IoError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (NonPositiveDepth, FloatingPointError, RuntimeError, SWMHDError) as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

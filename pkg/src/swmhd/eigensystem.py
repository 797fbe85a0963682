"""Powell-symmetrized flux Jacobians and their entropy-scaled eigenvectors.

The dissipation operators of the entropy stable fluxes need the right
eigenvectors of the Powell-modified Jacobian scaled so that their outer
product reproduces the entropy Jacobian, ``R R^T = H``. The unscaled
eigenvector matrix has an entry ``c_g**2 / B_n`` that blows up as the normal
field vanishes; only the scaled matrix is exposed, and it is assembled in
closed form so that column 3 stays finite for ``B_n = 0``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .physics import Axis, Array, as_axis, check_depth, stack_matrix, stack_vector


@dataclass(frozen=True)
class WaveSpeeds:
    c: Array
    c_g: Array


@dataclass(frozen=True)
class ScaledEigensystem:
    """Eigenvalues, scaled right eigenvectors and diagonal of S = T^2.

    ``r_scaled`` has shape ``(5, 5, ...)`` with column ``k`` belonging to
    ``lambdas[k]``.
    """

    lambdas: Array
    r_scaled: Array
    s_diag: Array


def wave_speeds(w, g: float = 1.0, axis=Axis.X) -> WaveSpeeds:
    h, _, _, B1, B2 = np.asarray(w, dtype=float)
    check_depth(h)
    Bn = B1 if as_axis(axis) is Axis.X else B2
    return WaveSpeeds(c=np.sqrt(g * h), c_g=np.sqrt(g * h + Bn**2))


def modified_flux_jacobian(w, g: float = 1.0, axis=Axis.X) -> Array:
    """Flux Jacobian with the Powell source folded in (symmetrizable form)."""
    h, v1, v2, B1, B2 = np.asarray(w, dtype=float)
    check_depth(h)
    zero = np.zeros_like(h)
    one = np.ones_like(h)
    if as_axis(axis) is Axis.X:
        return stack_matrix([
            [zero, one, zero, zero, zero],
            [g * h - v1**2 + B1**2, 2 * v1, zero, -B1, zero],
            [-v1 * v2 + B1 * B2, v2, v1, zero, -B1],
            [zero, zero, zero, v1, zero],
            [v2 * B1 - v1 * B2, B2, -B1, zero, v1],
        ])
    return stack_matrix([
        [zero, zero, one, zero, zero],
        [-v1 * v2 + B1 * B2, v2, v1, -B2, zero],
        [g * h - v2**2 + B2**2, zero, 2 * v2, zero, -B2],
        [v1 * B2 - v2 * B1, -B2, B1, v2, zero],
        [zero, zero, zero, zero, v2],
    ])


def eigenvalues(w, g: float = 1.0, axis=Axis.X) -> Array:
    h, v1, v2, B1, B2 = np.asarray(w, dtype=float)
    check_depth(h)
    if as_axis(axis) is Axis.X:
        vn, Bn = v1, B1
    else:
        vn, Bn = v2, B2
    cg = np.sqrt(g * h + Bn**2)
    return stack_vector([vn - cg, vn - Bn, vn, vn + Bn, vn + cg])


def scaled_eigensystem(w, g: float = 1.0, axis=Axis.X) -> ScaledEigensystem:
    h, v1, v2, B1, B2 = np.asarray(w, dtype=float)
    check_depth(h)
    axis = as_axis(axis)
    Bn = B1 if axis is Axis.X else B2
    vn = v1 if axis is Axis.X else v2

    c = np.sqrt(g * h)
    cg = np.sqrt(g * h + Bn**2)
    zero = np.zeros_like(h)

    t_fast = c / (cg * np.sqrt(2.0 * g))
    t_alfven = c / np.sqrt(2.0 * g)
    t_mid = Bn / (cg * np.sqrt(g))
    # T3 * c_g^2 / B_n, evaluated without dividing by B_n
    mid_field = cg / np.sqrt(g)

    if axis is Axis.X:
        R = stack_matrix([
            [t_fast, zero, t_mid, zero, t_fast],
            [t_fast * (v1 - cg), zero, t_mid * v1, zero, t_fast * (v1 + cg)],
            [t_fast * v2, t_alfven, t_mid * v2, t_alfven, t_fast * v2],
            [zero, zero, mid_field, zero, zero],
            [t_fast * B2, t_alfven, t_mid * B2, -t_alfven, t_fast * B2],
        ])
    else:
        R = stack_matrix([
            [t_fast, zero, t_mid, zero, t_fast],
            [t_fast * v1, t_alfven, t_mid * v1, t_alfven, t_fast * v1],
            [t_fast * (v2 - cg), zero, t_mid * v2, zero, t_fast * (v2 + cg)],
            [t_fast * B1, t_alfven, t_mid * B1, -t_alfven, t_fast * B1],
            [zero, zero, mid_field, zero, zero],
        ])

    lambdas = stack_vector([vn - cg, vn - Bn, vn, vn + Bn, vn + cg])
    s_diag = stack_vector([t_fast**2, t_alfven**2, t_mid**2, t_alfven**2, t_fast**2])
    return ScaledEigensystem(lambdas=lambdas, r_scaled=R, s_diag=s_diag)


def max_wave_speed(w, g: float = 1.0):
    """Largest |eigenvalue| over both directions, per state."""
    h, v1, v2, B1, B2 = np.asarray(w, dtype=float)
    check_depth(h)
    sx = np.abs(v1) + np.sqrt(g * h + B1**2)
    sy = np.abs(v2) + np.sqrt(g * h + B2**2)
    return np.maximum(sx, sy)


def directional_wave_speed(w, g: float = 1.0, axis=Axis.X):
    """|v_n| + c_g for the given direction, per state."""
    h, v1, v2, B1, B2 = np.asarray(w, dtype=float)
    check_depth(h)
    if as_axis(axis) is Axis.X:
        return np.abs(v1) + np.sqrt(g * h + B1**2)
    return np.abs(v2) + np.sqrt(g * h + B2**2)

"""Pointwise algebra of the shallow water MHD system.

States are numpy arrays whose leading axis has length 5; any trailing axes
are treated as a batch of cells or interfaces, so every function here works
on a single state ``(5,)`` as well as on a field ``(5, n)`` or ``(5, nx, ny)``.

Conserved ordering: ``(h, h*v1, h*v2, h*B1, h*B2)``.
Primitive ordering: ``(h, v1, v2, B1, B2)``.
"""
from __future__ import annotations

import enum

import numpy as np

from .errors import NonPositiveDepth

Array = np.ndarray

NVARS = 5
DEPTH_FLOOR = 1e-13

# component permutation that swaps the roles of the two horizontal directions
SWAP = (0, 2, 1, 4, 3)


class Axis(enum.Enum):
    X = 0
    Y = 1


def check_depth(h) -> None:
    h = np.asarray(h)
    if not np.all(h > DEPTH_FLOOR):
        bad = np.min(h) if h.size else h
        raise NonPositiveDepth(f"fluid depth must exceed {DEPTH_FLOOR:g}, got min h = {bad!r}")


def as_axis(axis) -> Axis:
    if isinstance(axis, Axis):
        return axis
    if isinstance(axis, str):
        return Axis[axis.upper()]
    return Axis(axis)


def stack_matrix(rows) -> Array:
    """Assemble a (possibly batched) matrix from nested rows of scalars/arrays."""
    shape = np.broadcast(*[np.asarray(e) for row in rows for e in row]).shape
    out = np.empty((len(rows), len(rows[0])) + shape)
    for i, row in enumerate(rows):
        for j, entry in enumerate(row):
            out[i, j] = entry
    return out


def stack_vector(entries) -> Array:
    shape = np.broadcast(*[np.asarray(e) for e in entries]).shape
    out = np.empty((len(entries),) + shape)
    for i, entry in enumerate(entries):
        out[i] = entry
    return out


def primitive_from_conserved(u) -> Array:
    u = np.asarray(u, dtype=float)
    h = u[0]
    check_depth(h)
    w = np.empty_like(u)
    w[0] = h
    w[1:] = u[1:] / h
    return w


def conserved_from_primitive(w) -> Array:
    w = np.asarray(w, dtype=float)
    h = w[0]
    check_depth(h)
    u = np.empty_like(w)
    u[0] = h
    u[1:] = w[1:] * h
    return u


def physical_flux(w, g: float = 1.0, axis=Axis.X) -> Array:
    """Physical flux of the primitive state ``w`` in direction ``axis``."""
    h, v1, v2, B1, B2 = np.asarray(w, dtype=float)
    check_depth(h)
    if as_axis(axis) is Axis.X:
        return stack_vector([
            h * v1,
            h * v1**2 + 0.5 * g * h**2 - h * B1**2,
            h * v1 * v2 - h * B1 * B2,
            np.zeros_like(h),
            h * v1 * B2 - h * v2 * B1,
        ])
    return stack_vector([
        h * v2,
        h * v1 * v2 - h * B1 * B2,
        h * v2**2 + 0.5 * g * h**2 - h * B2**2,
        h * v2 * B1 - h * v1 * B2,
        np.zeros_like(h),
    ])


def entropy(w, g: float = 1.0):
    """Total energy, which serves as the mathematical entropy."""
    h, v1, v2, B1, B2 = np.asarray(w, dtype=float)
    check_depth(h)
    return 0.5 * (g * h**2 + h * (v1**2 + v2**2 + B1**2 + B2**2))


def entropy_variables(w, g: float = 1.0) -> Array:
    h, v1, v2, B1, B2 = np.asarray(w, dtype=float)
    check_depth(h)
    return stack_vector([
        g * h - 0.5 * (v1**2 + v2**2 + B1**2 + B2**2),
        v1, v2, B1, B2,
    ])


def conserved_from_entropy_variables(q, g: float = 1.0) -> Array:
    q1, q2, q3, q4, q5 = np.asarray(q, dtype=float)
    h = (q1 + 0.5 * (q2**2 + q3**2 + q4**2 + q5**2)) / g
    check_depth(h)
    return stack_vector([h, h * q2, h * q3, h * q4, h * q5])


def entropy_jacobian(w, g: float = 1.0) -> Array:
    """Symmetric positive definite Jacobian H = du/dq."""
    h, v1, v2, B1, B2 = np.asarray(w, dtype=float)
    check_depth(h)
    c2 = g * h
    one = np.ones_like(h)
    H = stack_matrix([
        [one, v1, v2, B1, B2],
        [v1, v1 * v1 + c2, v1 * v2, v1 * B1, v1 * B2],
        [v2, v1 * v2, v2 * v2 + c2, v2 * B1, v2 * B2],
        [B1, v1 * B1, v2 * B1, B1 * B1 + c2, B1 * B2],
        [B2, v1 * B2, v2 * B2, B1 * B2, B2 * B2 + c2],
    ])
    return H / g


def entropy_jacobian_inverse(w, g: float = 1.0) -> Array:
    """Inverse entropy Jacobian H^-1 = dq/du."""
    h, v1, v2, B1, B2 = np.asarray(w, dtype=float)
    check_depth(h)
    zero = np.zeros_like(h)
    one = np.ones_like(h)
    Hinv = stack_matrix([
        [g * h + v1**2 + v2**2 + B1**2 + B2**2, -v1, -v2, -B1, -B2],
        [-v1, one, zero, zero, zero],
        [-v2, zero, one, zero, zero],
        [-B1, zero, zero, one, zero],
        [-B2, zero, zero, zero, one],
    ])
    return Hinv / h


def flux_jacobian(w, g: float = 1.0) -> Array:
    """Jacobian df/du of the x-direction physical flux."""
    h, v1, v2, B1, B2 = np.asarray(w, dtype=float)
    check_depth(h)
    zero = np.zeros_like(h)
    one = np.ones_like(h)
    return stack_matrix([
        [zero, one, zero, zero, zero],
        [g * h - v1**2 + B1**2, 2 * v1, zero, -2 * B1, zero],
        [-v1 * v2 + B1 * B2, v2, v1, -B2, -B1],
        [zero, zero, zero, zero, zero],
        [v2 * B1 - v1 * B2, B2, -B1, -v2, v1],
    ])


def entropy_flux(w, g: float = 1.0, axis=Axis.X):
    h, v1, v2, B1, B2 = np.asarray(w, dtype=float)
    check_depth(h)
    if as_axis(axis) is Axis.X:
        return (g * h**2 * v1
                + 0.5 * (h * v1**3 + h * v1 * v2**2 + h * v1 * B2**2 - h * v1 * B1**2)
                - h * v2 * B1 * B2)
    return (g * h**2 * v2
            + 0.5 * (h * v1**2 * v2 + h * v2**3 + h * v2 * B1**2 - h * v2 * B2**2)
            - h * v1 * B1 * B2)


def entropy_potential(w, g: float = 1.0, axis=Axis.X):
    h, v1, v2, B1, B2 = np.asarray(w, dtype=float)
    check_depth(h)
    vdotB = v1 * B1 + v2 * B2
    if as_axis(axis) is Axis.X:
        return 0.5 * g * h**2 * v1 - h * B1 * vdotB
    return 0.5 * g * h**2 * v2 - h * B2 * vdotB

"""Compiled residual kernels.

These fuse the per-interface work of :mod:`swmhd.fluxes` into single loops.
Only the x-direction interface is coded; y-direction interfaces reuse it
through the (v1, B1) <-> (v2, B2) swap, which maps one direction onto the
other exactly. The numpy implementation in :mod:`swmhd.fluxes` stays the
reference and the test suite checks the two against each other.
"""
from __future__ import annotations

import math

import numpy as np
from numba import njit

from .fluxes import SOURCE_GUARD
from .physics import DEPTH_FLOOR

KIND_CODES = {"ec": 0, "es1": 1, "es2": 2}


@njit(cache=True, inline="always")
def _guarded(num, den, width, bl, br):
    if abs(den) < SOURCE_GUARD * width * (1.0 + max(abs(bl), abs(br))):
        return 0.0
    return num / den


@njit(cache=True, inline="always")
def interface_x(hL, v1L, v2L, B1L, B2L, hR, v1R, v2R, B1R, B2R,
                dxL, dxR, kind, g, f, s):
    """Numerical flux ``f`` and Janhunen source ``s`` at one x-interface."""
    h = 0.5 * (hL + hR)
    h2 = 0.5 * (hL * hL + hR * hR)
    v1 = 0.5 * (v1L + v1R)
    v2 = 0.5 * (v2L + v2R)
    B1 = 0.5 * (B1L + B1R)
    B2 = 0.5 * (B2L + B2R)
    hB1 = 0.5 * (hL * B1L + hR * B1R)

    mass = h * v1
    f[0] = mass
    f[1] = mass * v1 + 0.5 * g * h2 - hB1 * B1
    f[2] = mass * v2 - hB1 * B2
    f[3] = mass * B1 - hB1 * v1
    f[4] = mass * B2 - hB1 * v2

    jump_hB1 = hR * B1R - hL * B1L
    width = max(dxL, dxR)
    s[0] = 0.0
    s[1] = 0.0
    s[2] = 0.0
    s[3] = -jump_hB1 * _guarded(0.5 * (v1L * B1L + v1R * B1R), 0.5 * (dxL * B1L + dxR * B1R),
                                width, B1L, B1R)
    s[4] = -jump_hB1 * _guarded(0.5 * (v2L * B2L + v2R * B2R), 0.5 * (dxL * B2L + dxR * B2R),
                                width, B2L, B2R)

    if kind == 0:
        return

    dq0 = (g * hR - 0.5 * (v1R * v1R + v2R * v2R + B1R * B1R + B2R * B2R)
           - g * hL + 0.5 * (v1L * v1L + v2L * v2L + B1L * B1L + B2L * B2L))
    dq1 = v1R - v1L
    dq2 = v2R - v2L
    dq3 = B1R - B1L
    dq4 = B2R - B2L

    if kind == 1:
        c = math.sqrt(g * h)
        cg = math.sqrt(g * h + B1 * B1)
        t_fast = c / (cg * math.sqrt(2.0 * g))
        t_alf = c / math.sqrt(2.0 * g)
        t_mid = B1 / (cg * math.sqrt(g))
        mid = cg / math.sqrt(g)
        # characteristic amplitudes R^T dq, scaled by |lambda|
        a0 = t_fast * (dq0 + (v1 - cg) * dq1 + v2 * dq2 + B2 * dq4) * abs(v1 - cg)
        a1 = t_alf * (dq2 + dq4) * abs(v1 - B1)
        a2 = (t_mid * (dq0 + v1 * dq1 + v2 * dq2 + B2 * dq4) + mid * dq3) * abs(v1)
        a3 = t_alf * (dq2 - dq4) * abs(v1 + B1)
        a4 = t_fast * (dq0 + (v1 + cg) * dq1 + v2 * dq2 + B2 * dq4) * abs(v1 + cg)
        d0 = t_fast * (a0 + a4) + t_mid * a2
        d1 = t_fast * ((v1 - cg) * a0 + (v1 + cg) * a4) + t_mid * v1 * a2
        d2 = t_fast * v2 * (a0 + a4) + t_alf * (a1 + a3) + t_mid * v2 * a2
        d3 = mid * a2
        d4 = t_fast * B2 * (a0 + a4) + t_alf * (a1 - a3) + t_mid * B2 * a2
    else:
        lam = max(abs(v1L) + math.sqrt(g * hL + B1L * B1L),
                  abs(v1R) + math.sqrt(g * hR + B1R * B1R))
        sigma = dq0 + v1 * dq1 + v2 * dq2 + B1 * dq3 + B2 * dq4
        c2 = g * h
        d0 = lam * sigma / g
        d1 = lam * (v1 * sigma + c2 * dq1) / g
        d2 = lam * (v2 * sigma + c2 * dq2) / g
        d3 = lam * (B1 * sigma + c2 * dq3) / g
        d4 = lam * (B2 * sigma + c2 * dq4) / g

    f[0] -= 0.5 * d0
    f[1] -= 0.5 * d1
    f[2] -= 0.5 * d2
    f[3] -= 0.5 * d3
    f[4] -= 0.5 * d4


@njit(cache=True)
def _min_depth_ok(u):
    for v in u[0].ravel():
        if not v > DEPTH_FLOOR:
            return False
    return True


@njit(cache=True)
def rhs_1d(u, widths, periodic, kind, g, out):
    """Fill ``out`` with the 1D residual; returns False on a depth violation."""
    n = u.shape[1]
    for i in range(n):
        if not u[0, i] > DEPTH_FLOOR:
            return False
    out[:, :] = 0.0
    f = np.empty(5)
    s = np.empty(5)
    for i in range(n + 1):
        if i == 0:
            left = n - 1 if periodic else 0
        else:
            left = i - 1
        if i == n:
            right = 0 if periodic else n - 1
        else:
            right = i
        hL = u[0, left]
        hR = u[0, right]
        interface_x(hL, u[1, left] / hL, u[2, left] / hL, u[3, left] / hL, u[4, left] / hL,
                    hR, u[1, right] / hR, u[2, right] / hR, u[3, right] / hR, u[4, right] / hR,
                    widths[left], widths[right], kind, g, f, s)
        if i > 0:
            inv = 1.0 / widths[i - 1]
            for k in range(5):
                out[k, i - 1] += 0.5 * s[k] - f[k] * inv
        if i < n:
            inv = 1.0 / widths[i]
            for k in range(5):
                out[k, i] += f[k] * inv + 0.5 * s[k]
    return True


@njit(cache=True)
def rhs_2d(u, dx, dy, periodic, kind, g, out):
    """Fill ``out`` with the 2D residual; returns False on a depth violation."""
    nx = u.shape[1]
    ny = u.shape[2]
    if not _min_depth_ok(u):
        return False
    out[:, :, :] = 0.0
    f = np.empty(5)
    s = np.empty(5)
    for j in range(ny):
        for i in range(nx + 1):
            if i == 0:
                left = nx - 1 if periodic else 0
            else:
                left = i - 1
            if i == nx:
                right = 0 if periodic else nx - 1
            else:
                right = i
            hL = u[0, left, j]
            hR = u[0, right, j]
            interface_x(hL, u[1, left, j] / hL, u[2, left, j] / hL, u[3, left, j] / hL,
                        u[4, left, j] / hL,
                        hR, u[1, right, j] / hR, u[2, right, j] / hR, u[3, right, j] / hR,
                        u[4, right, j] / hR,
                        dx, dx, kind, g, f, s)
            if i > 0:
                for k in range(5):
                    out[k, i - 1, j] += 0.5 * s[k] - f[k] / dx
            if i < nx:
                for k in range(5):
                    out[k, i, j] += f[k] / dx + 0.5 * s[k]
    # y-direction through the component swap (0, 2, 1, 4, 3)
    for i in range(nx):
        for j in range(ny + 1):
            if j == 0:
                lo = ny - 1 if periodic else 0
            else:
                lo = j - 1
            if j == ny:
                hi = 0 if periodic else ny - 1
            else:
                hi = j
            hL = u[0, i, lo]
            hR = u[0, i, hi]
            interface_x(hL, u[2, i, lo] / hL, u[1, i, lo] / hL, u[4, i, lo] / hL,
                        u[3, i, lo] / hL,
                        hR, u[2, i, hi] / hR, u[1, i, hi] / hR, u[4, i, hi] / hR,
                        u[3, i, hi] / hR,
                        dy, dy, kind, g, f, s)
            f[1], f[2] = f[2], f[1]
            f[3], f[4] = f[4], f[3]
            s[1], s[2] = s[2], s[1]
            s[3], s[4] = s[4], s[3]
            if j > 0:
                for k in range(5):
                    out[k, i, j - 1] += 0.5 * s[k] - f[k] / dy
            if j < ny:
                for k in range(5):
                    out[k, i, j] += f[k] / dy + 0.5 * s[k]
    return True

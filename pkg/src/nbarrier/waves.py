"""Trajectory integration and empirical bound checking for wave profiles.

The second-order wave system is reduced to first order in the flux variable
w_i = (u_i^m)'.  For m > 1 the back-map u_i' = w_i / (m u_i^{m-1}) is
singular at u_i = 0, so integration stops at a small positivity floor rather
than stepping into the degenerate set.  Stepping is classical fixed-step
RK4; outputs are bit-reproducible for identical inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import log
from typing import Sequence

import numpy as np

from .bounds import BoundsResult
from .model import SystemSpec

POSITIVITY_FLOOR = 1e-8


class _FloorHit(Exception):
    """Internal: a stage state fell below the positivity floor."""


@dataclass(frozen=True)
class Trajectory:
    """Stored integration output on a fixed grid.

    xs, u, w are the grid and states; p and q are the weighted totals
    sum alpha_i u_i and sum alpha_i d_i u_i^m for the alpha the trajectory
    was integrated with.  truncated marks an early stop at the positivity
    floor; clamped marks any stored component lifted from below zero.
    """

    xs: np.ndarray
    u: np.ndarray
    w: np.ndarray
    p: np.ndarray
    q: np.ndarray
    alpha: tuple
    truncated: bool
    truncation_reason: str | None
    clamped: bool

    @property
    def n(self) -> int:
        return self.u.shape[1]


def integrate(spec: SystemSpec, u0: Sequence[float], w0: Sequence[float],
              x_span: tuple, step: float,
              alpha: Sequence[float] | None = None) -> Trajectory:
    """Integrate the first-order reduction over x_span with fixed-step RK4.

    Args:
        spec: system to integrate.
        u0: strictly positive initial state.
        w0: initial flux state w_i = (u_i^m)'(x0) (= u_i'(x0) when m = 1).
        x_span: (x0, x1) with x1 > x0; a final short step lands exactly on x1
            when the span is not an integer multiple of step.
        step: positive grid spacing.
        alpha: weights for the stored p and q columns (default all ones).

    Returns a Trajectory, truncated early if any species reaches the
    positivity floor while m > 1.
    """
    n = spec.n
    if len(u0) != n or len(w0) != n:
        raise ValueError("initial data dimensions must match the system")
    if any(ui <= 0 for ui in u0):
        raise ValueError("initial state must be strictly positive")
    if step <= 0:
        raise ValueError("step must be positive")
    x0, x1 = float(x_span[0]), float(x_span[1])
    if not x1 > x0:
        raise ValueError("x_span must satisfy x1 > x0")
    if alpha is None:
        alpha = (1.0,) * n
    elif len(alpha) != n:
        raise ValueError("alpha length must match the system")
    alpha_vec = np.asarray(alpha, dtype=float)

    m = spec.m
    theta = spec.theta
    d_vec = np.asarray(spec.d, dtype=float)
    l_vec = np.asarray(spec.l, dtype=float)
    sigma_vec = np.asarray(spec.reaction.sigma, dtype=float)
    C_mat = np.asarray(spec.reaction.C, dtype=float)
    degenerate = m > 1

    def rhs(u, w):
        if degenerate:
            if np.any(u < POSITIVITY_FLOOR):
                raise _FloorHit
            du = w / (m * u ** (m - 1.0))
        else:
            du = w
        f = sigma_vec - C_mat @ u
        dw = (-theta * du - u ** l_vec * f) / d_vec
        return du, dw

    span = x1 - x0
    n_full = int(span / step + 1e-9)
    remainder = span - n_full * step
    sizes = [step] * n_full
    if remainder > step * 1e-9:
        sizes.append(remainder)

    xs = [x0]
    us = [np.asarray(u0, dtype=float)]
    ws = [np.asarray(w0, dtype=float)]
    truncated = False
    reason = None
    x = x0
    for h in sizes:
        u, w = us[-1], ws[-1]
        try:
            k1u, k1w = rhs(u, w)
            k2u, k2w = rhs(u + 0.5 * h * k1u, w + 0.5 * h * k1w)
            k3u, k3w = rhs(u + 0.5 * h * k2u, w + 0.5 * h * k2w)
            k4u, k4w = rhs(u + h * k3u, w + h * k3w)
            u_next = u + (h / 6.0) * (k1u + 2.0 * k2u + 2.0 * k3u + k4u)
            w_next = w + (h / 6.0) * (k1w + 2.0 * k2w + 2.0 * k3w + k4w)
            if degenerate and np.any(u_next < POSITIVITY_FLOOR):
                raise _FloorHit
        except _FloorHit:
            truncated = True
            reason = (f"positivity floor {POSITIVITY_FLOOR:g} reached "
                      f"near x = {x + h:.6g}")
            break
        x += h
        xs.append(x)
        us.append(u_next)
        ws.append(w_next)

    u_arr = np.array(us)
    w_arr = np.array(ws)
    clamped = bool(np.any(u_arr < 0.0))
    if clamped:
        u_arr = np.maximum(u_arr, 0.0)
    p_arr = u_arr @ alpha_vec
    q_arr = (u_arr ** m) @ (alpha_vec * d_vec)
    return Trajectory(xs=np.array(xs), u=u_arr, w=w_arr, p=p_arr, q=q_arr,
                      alpha=tuple(alpha), truncated=truncated,
                      truncation_reason=reason, clamped=clamped)


@dataclass(frozen=True)
class BoundCheckReport:
    """Extrema of the weighted total and any excursions past the bounds."""

    min_p: float
    max_p: float
    violations: tuple  # (x, p) pairs outside [lower, upper]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_bounds(traj: Trajectory, alpha: Sequence[float],
                 bounds: BoundsResult) -> BoundCheckReport:
    """Scan p(x) = sum alpha_i u_i over the stored grid against the bounds."""
    if len(alpha) != traj.n:
        raise ValueError("alpha length must match the trajectory")
    p = traj.u @ np.asarray(alpha, dtype=float)
    outside = (p < bounds.lower) | (p > bounds.upper)
    violations = tuple((float(x), float(pv)) for x, pv in
                       zip(traj.xs[outside], p[outside]))
    return BoundCheckReport(min_p=float(p.min()), max_p=float(p.max()),
                            violations=violations)


def evenness_index(u: Sequence[float]) -> float:
    """Normalized share entropy of a positive composition, in [0, 1]."""
    s = len(u)
    if s < 2:
        raise ValueError("evenness needs at least two species")
    if any(ui <= 0 for ui in u):
        raise ValueError("evenness needs strictly positive components")
    total = sum(u)
    shares = [ui / total for ui in u]
    return -sum(sh * log(sh) for sh in shares) / log(s)


def flux_balance_defect(spec: SystemSpec, traj: Trajectory,
                        alpha: Sequence[float]) -> float:
    """Integrated identity defect along the stored trajectory.

    Summing the wave equations with weights alpha and integrating once gives
    q'(x1) - q'(x0) + theta (p(x1) - p(x0)) + int F dx = 0 with
    q' = sum alpha_i d_i w_i and F = sum alpha_i u_i^{l_i} f_i(u).  Returns
    the left side evaluated with trapezoidal quadrature on the stored grid;
    small means the stored states are consistent with the system.
    """
    if len(alpha) != traj.n:
        raise ValueError("alpha length must match the trajectory")
    alpha_vec = np.asarray(alpha, dtype=float)
    d_vec = np.asarray(spec.d, dtype=float)
    l_vec = np.asarray(spec.l, dtype=float)
    sigma_vec = np.asarray(spec.reaction.sigma, dtype=float)
    C_mat = np.asarray(spec.reaction.C, dtype=float)

    qprime = traj.w @ (alpha_vec * d_vec)
    p = traj.u @ alpha_vec
    f = sigma_vec - traj.u @ C_mat.T
    F = (traj.u ** l_vec * f) @ alpha_vec
    dx = np.diff(traj.xs)
    integral = float(np.sum(0.5 * dx * (F[1:] + F[:-1])))
    return float(qprime[-1] - qprime[0] + spec.theta * (p[-1] - p[0]) + integral)

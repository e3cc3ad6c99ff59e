"""Problem description layer: competition systems of porous-medium type.

A system couples n species through degenerate diffusion d_i (u_i^m)'' and
Lotka-Volterra competition f_i(u) = sigma_i - sum_j c_ij u_j, entering the
wave equation as u_i^{l_i} f_i(u).  This module holds the immutable spec
types, the axis-intercept hull of the competition planes, sampling-based
verification of the sign hypothesis on that hull, and the boundary-state
characteristic that decides whether the lower bound degenerates to zero.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import product
from typing import Sequence

REGION_REL_TOL = 1e-9      # relative tolerance for region membership
SIGN_ABS_TOL = 1e-12       # absolute tolerance for sign checks on samples
ZERO_STATE_TOL = 1e-12     # componentwise threshold for the zero equilibrium


def _as_tuple(values: Sequence[float]) -> tuple:
    return tuple(values)


@dataclass(frozen=True)
class ReactionSpec:
    """Affine competition kinetics: growth rates and competition matrix.

    f_i(u) = sigma[i] - sum_j C[i][j] * u[j].  All rates strictly positive.
    """

    sigma: tuple
    C: tuple

    def __post_init__(self):
        object.__setattr__(self, "sigma", _as_tuple(self.sigma))
        object.__setattr__(self, "C", tuple(_as_tuple(row) for row in self.C))
        n = len(self.sigma)
        if n == 0:
            raise ValueError("reaction needs at least one species")
        if any(s <= 0 for s in self.sigma):
            raise ValueError("growth rates must be strictly positive")
        if len(self.C) != n or any(len(row) != n for row in self.C):
            raise ValueError(f"competition matrix must be {n}x{n}")
        if any(c <= 0 for row in self.C for c in row):
            raise ValueError("competition coefficients must be strictly positive")

    @property
    def n(self) -> int:
        return len(self.sigma)


@dataclass(frozen=True)
class SystemSpec:
    """Full wave-equation data: diffusion, degeneracy exponents, speed, kinetics."""

    n: int
    m: float
    d: tuple
    l: tuple
    theta: float
    reaction: ReactionSpec

    def __post_init__(self):
        object.__setattr__(self, "d", _as_tuple(self.d))
        object.__setattr__(self, "l", _as_tuple(self.l))
        if self.n < 1:
            raise ValueError("need at least one species")
        if self.m < 1:
            raise ValueError("diffusion exponent m must be >= 1")
        if len(self.d) != self.n or any(di <= 0 for di in self.d):
            raise ValueError("d must be a positive vector of length n")
        if len(self.l) != self.n or any(li <= 0 for li in self.l):
            raise ValueError("l must be a positive vector of length n")
        if self.reaction.n != self.n:
            raise ValueError("reaction dimension does not match n")


@dataclass(frozen=True)
class HullBounds:
    """Outer and inner axis intercepts bracketing the coexistence region.

    Strict ubar_i > ulow_i > 0 is what the sign hypothesis needs; equality is
    tolerated here with a warning because symmetric coefficient matrices
    produce it, and downstream verification refuses to run on it.
    """

    ubar: tuple
    ulow: tuple

    def __post_init__(self):
        object.__setattr__(self, "ubar", _as_tuple(self.ubar))
        object.__setattr__(self, "ulow", _as_tuple(self.ulow))
        if len(self.ubar) != len(self.ulow):
            raise ValueError("ubar and ulow must have equal length")
        if any(lo <= 0 for lo in self.ulow):
            raise ValueError("ulow must be strictly positive")
        if any(hi < lo for hi, lo in zip(self.ubar, self.ulow)):
            raise ValueError("ubar must dominate ulow componentwise")
        if any(hi == lo for hi, lo in zip(self.ubar, self.ulow)):
            warnings.warn("degenerate hull: ubar_i == ulow_i for some i", stacklevel=3)

    @property
    def n(self) -> int:
        return len(self.ubar)

    def is_degenerate(self) -> bool:
        return any(hi == lo for hi, lo in zip(self.ubar, self.ulow))


@dataclass(frozen=True)
class Equilibrium:
    """A candidate rest state; nonnegativity is the only intrinsic constraint."""

    u: tuple

    def __post_init__(self):
        object.__setattr__(self, "u", _as_tuple(self.u))
        if any(ui < 0 for ui in self.u):
            raise ValueError("equilibrium components must be nonnegative")

    def is_zero(self, tol: float = ZERO_STATE_TOL) -> bool:
        return all(abs(ui) <= tol for ui in self.u)


def reaction_eval(reaction: ReactionSpec, u: Sequence[float]) -> tuple:
    """Evaluate the affine factors f_i(u) = sigma_i - sum_j c_ij u_j.

    Returns the bracketed competition factor only, without the u_i^{l_i}
    prefactor that multiplies it in the wave equation.
    """
    if len(u) != reaction.n:
        raise ValueError(f"state has length {len(u)}, reaction expects {reaction.n}")
    return tuple(
        s - sum(c * uj for c, uj in zip(row, u))
        for s, row in zip(reaction.sigma, reaction.C)
    )


def equilibrium_defect(spec: SystemSpec, eq: Equilibrium) -> float:
    """Max componentwise magnitude of u_i^{l_i} f_i(u) at the candidate state."""
    f = reaction_eval(spec.reaction, eq.u)
    return max(abs(ui ** li * fi) for ui, li, fi in zip(eq.u, spec.l, f))


def hull_intercepts(reaction: ReactionSpec) -> HullBounds:
    """Extreme axis intercepts of the n competition planes.

    Plane j is sigma_j = sum_i c_ji u_i; its u_i-axis intercept is
    sigma_j / c_ji.  The hull takes the largest and smallest intercept per
    axis.  Emits a degeneracy warning when the two coincide on some axis.
    """
    n = reaction.n
    ubar = tuple(max(reaction.sigma[j] / reaction.C[j][i] for j in range(n)) for i in range(n))
    ulow = tuple(min(reaction.sigma[j] / reaction.C[j][i] for j in range(n)) for i in range(n))
    return HullBounds(ubar=ubar, ulow=ulow)


def chi(e_minus: Equilibrium, e_plus: Equilibrium) -> int:
    """Boundary-state characteristic: 0 if either rest state is zero, else 1."""
    return 0 if e_minus.is_zero() or e_plus.is_zero() else 1


@dataclass(frozen=True)
class HypothesisReport:
    """Outcome of sign-hypothesis sampling on the two hull regions."""

    inner_ok: bool
    outer_ok: bool
    worst_inner_point: tuple
    worst_inner_value: float
    worst_outer_point: tuple
    worst_outer_value: float

    @property
    def ok(self) -> bool:
        return self.inner_ok and self.outer_ok


def _simplex_lattice(n: int, resolution: int):
    """Integer compositions k with sum(k) == resolution, as barycentric weights."""
    for k in product(range(resolution + 1), repeat=n - 1):
        rest = resolution - sum(k)
        if rest >= 0:
            yield tuple(ki / resolution for ki in k) + (rest / resolution,)


def _solid_lattice(n: int, resolution: int):
    """Lattice points of the solid simplex sum(t) <= 1, vertices included."""
    for k in product(range(resolution + 1), repeat=n):
        if sum(k) <= resolution:
            yield tuple(ki / resolution for ki in k)


def verify_hypothesis_H(
    spec: SystemSpec,
    hull: HullBounds,
    samples_per_face: int,
    tol: float = SIGN_ABS_TOL,
) -> HypothesisReport:
    """Check the sign hypothesis on the hull regions by deterministic sampling.

    Inner region (below the ulow face): every f_i must be >= -tol.  Outer
    region (on and beyond the ubar face, out to twice the intercepts): every
    f_i must be <= +tol.  Reports the worst offending sample per region.
    The check refuses degenerate hulls, where the two regions touch.
    """
    if hull.n != spec.n:
        raise ValueError("hull dimension does not match system")
    if samples_per_face < 1:
        raise ValueError("samples_per_face must be positive")
    if hull.is_degenerate():
        raise ValueError("hypothesis cannot be verified on a degenerate hull")

    n = spec.n
    r = samples_per_face

    inner_ok = True
    worst_inner_val = float("inf")
    worst_inner_pt = (0.0,) * n
    for t in _solid_lattice(n, r):
        u = tuple(ti * lo for ti, lo in zip(t, hull.ulow))
        low = min(reaction_eval(spec.reaction, u))
        if low < worst_inner_val:
            worst_inner_val, worst_inner_pt = low, u
        if low < -tol:
            inner_ok = False

    outer_ok = True
    worst_outer_val = float("-inf")
    worst_outer_pt = hull.ubar
    scales = [1.0 + j / r for j in range(r + 1)]  # face and beyond, up to 2*ubar
    for t in _simplex_lattice(n, r):
        base = tuple(ti * hi for ti, hi in zip(t, hull.ubar))
        for s in scales:
            u = tuple(s * bi for bi in base)
            high = max(reaction_eval(spec.reaction, u))
            if high > worst_outer_val:
                worst_outer_val, worst_outer_pt = high, u
            if high > tol:
                outer_ok = False

    return HypothesisReport(
        inner_ok=inner_ok,
        outer_ok=outer_ok,
        worst_inner_point=worst_inner_pt,
        worst_inner_value=worst_inner_val,
        worst_outer_point=worst_outer_pt,
        worst_outer_value=worst_outer_val,
    )


def system_to_dict(spec: SystemSpec) -> dict:
    """JSON-ready document with keys n, m, d, l, theta, sigma, C."""
    return {
        "n": spec.n,
        "m": spec.m,
        "d": list(spec.d),
        "l": list(spec.l),
        "theta": spec.theta,
        "sigma": list(spec.reaction.sigma),
        "C": [list(row) for row in spec.reaction.C],
    }


def system_from_dict(doc: dict) -> SystemSpec:
    """Inverse of system_to_dict; raises ValueError naming any missing key."""
    try:
        n = int(doc["n"])
        m = float(doc["m"])
        d = tuple(float(x) for x in doc["d"])
        l = tuple(float(x) for x in doc["l"])
        theta = float(doc["theta"])
        sigma = tuple(float(x) for x in doc["sigma"])
        C = tuple(tuple(float(x) for x in row) for row in doc["C"])
    except KeyError as exc:
        raise ValueError(f"system document is missing key {exc.args[0]!r}") from exc
    return SystemSpec(n=n, m=m, d=d, l=l, theta=theta,
                      reaction=ReactionSpec(sigma=sigma, C=C))

"""Closed-form relations along the six characteristic families.

The extreme families 1 and 6 are genuinely nonlinear and carry either a
rarefaction fan, described by five Riemann invariants built on the integral
``afun``, or a shock, described by a one-parameter locus in the depth ratio
``z = h_post / h_pre`` together with Lax inequalities.  The interior families
are linearly degenerate: two shear waves moving at u -/+ sqrt(P11) and a
double contact at u.

Everything here is expressed in z-form.  The star-state system of the exact
solver is assembled from ``f_total_pressure`` (total pressure reached behind
the 1- or 6-wave) and ``g_velocity`` (velocity reached there), both piecewise
in z with the rarefaction branch for z <= 1 and the shock branch for z > 1;
the two branches join with matching value and slope at z = 1.  Their z
derivatives feed the Newton iteration.

Generalized jump conditions for the non-conservative system use the straight
segment between the two conserved states as the path; ``jump_residuals``
evaluates them for any candidate discontinuity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .model import (
    DomainError,
    ModelParams,
    PrimitiveState,
    noncons_term,
    physical_flux,
    prim_to_cons,
    total_energy,
)


class OutOfFan(DomainError):
    """Similarity coordinate lies outside the rarefaction fan."""


class WaveFamily(Enum):
    RAREFACTION_1 = "1-rarefaction"
    SHOCK_1 = "1-shock"
    SHEAR_2 = "2-shear"
    CONTACT = "contact"
    SHEAR_5 = "5-shear"
    RAREFACTION_6 = "6-rarefaction"
    SHOCK_6 = "6-shock"
    NONE = "degenerate"


@dataclass(frozen=True)
class SideData:
    """One side of a Riemann problem in the variables of the star system."""

    h: float
    u: float
    v: float
    R11: float
    R12: float
    R22: float

    @classmethod
    def from_primitive(cls, q: PrimitiveState) -> "SideData":
        return cls(q.h, q.v1, q.v2, q.h * q.P11, q.h * q.P12, q.h * q.P22)

    def to_primitive(self) -> PrimitiveState:
        return PrimitiveState(self.h, self.u, self.v, self.R11 / self.h,
                              self.R12 / self.h, self.R22 / self.h)

    @property
    def c(self) -> float:
        # rarefaction constant P11/h^2, invariant along fans of both families
        return self.R11 / self.h ** 3

    @property
    def P11(self) -> float:
        return self.R11 / self.h

    @property
    def P12(self) -> float:
        return self.R12 / self.h

    @property
    def P22(self) -> float:
        return self.R22 / self.h

    def pi(self, g: float) -> float:
        return 0.5 * g * self.h * self.h + self.R11


def afun(h: float, c: float, params: ModelParams) -> float:
    """Velocity potential of the extreme families.

    afun(h, c) = integral from 0 to h of sqrt(g*x + 3*c*x^2)/x dx
               = sqrt(g*h + 3*c*h^2) + (g/sqrt(3*c)) * asinh(sqrt(3*c*h/g))

    Strictly increasing in h with afun(0, c) = 0.  u + afun is constant
    across 1-fans, u - afun across 6-fans.
    """
    if h == 0.0:
        return 0.0
    g = params.g
    return (math.sqrt(g * h + 3.0 * c * h * h)
            + g / math.sqrt(3.0 * c) * math.asinh(math.sqrt(3.0 * c * h / g)))


def bfun(h: float, c: float, params: ModelParams) -> float:
    """afun plus the local wave speed sqrt(g*h + 3*c*h^2).

    The similarity coordinate inside a fan is an affine function of bfun of
    the local depth, so inverting bfun is how fan interiors are sampled.
    Strictly increasing, bfun(0, c) = 0.
    """
    if h == 0.0:
        return 0.0
    g = params.g
    return (2.0 * math.sqrt(g * h + 3.0 * c * h * h)
            + g / math.sqrt(3.0 * c) * math.asinh(math.sqrt(3.0 * c * h / g)))


def _dbfun_dh(h, c, g):
    return (3.0 * g + 12.0 * c * h) / (2.0 * math.sqrt(g * h + 3.0 * c * h * h))


def rarefaction_h_of_xi(xi: float, edge: tuple[float, float], c: float,
                        params: ModelParams, family: int) -> float:
    """Depth at similarity coordinate xi inside a rarefaction fan.

    ``edge`` is (xi_edge, h_edge) at the head of the fan (the outer edge,
    adjacent to the undisturbed state).  Inside a 1-fan,
    xi - xi_edge = -(bfun(h) - bfun(h_edge)); a 6-fan mirrors the sign.
    bfun is monotone, so the equation is solved by bisection down to a
    bracket of 1e-14 * h_edge followed by one Newton polish.
    """
    xi_edge, h_edge = edge
    sgn = -1.0 if family == 1 else 1.0
    b_edge = bfun(h_edge, c, params)
    target = b_edge + sgn * (xi - xi_edge)
    tol = 1e-12 * max(1.0, abs(b_edge))
    if target > b_edge + tol or target < -tol:
        raise OutOfFan(f"xi = {xi} outside fan with head at {xi_edge}")
    target = min(max(target, 0.0), b_edge)

    lo, hi = 0.0, h_edge
    while hi - lo > 1e-14 * h_edge:
        mid = 0.5 * (lo + hi)
        if bfun(mid, c, params) < target:
            lo = mid
        else:
            hi = mid
    h = 0.5 * (lo + hi)
    if h > 0.0:
        h -= (bfun(h, c, params) - target) / _dbfun_dh(h, c, params.g)
    return min(max(h, lo), hi)


def rarefaction_invariants(side: SideData, family: int,
                           params: ModelParams) -> tuple:
    """The five Riemann invariants of the 1- or 6-family:

        ( P11/h^2, u +/- afun, det(P)/h^2, beta, v +/- 2*beta*afun )

    with beta = P12/(g*h + 2*P11); upper signs for family 1.
    """
    g = params.g
    sgn = 1.0 if family == 1 else -1.0
    A = afun(side.h, side.c, params)
    P11, P12, P22 = side.P11, side.P12, side.P22
    beta = P12 / (g * side.h + 2.0 * P11)
    return (
        P11 / side.h ** 2,
        side.u + sgn * A,
        (P11 * P22 - P12 * P12) / side.h ** 2,
        beta,
        side.v + sgn * 2.0 * beta * A,
    )


def shear_invariants(side: SideData, family: int) -> tuple:
    """Invariants of the 2- or 5-shear wave:
    ( h, u, P11, v*sqrt(P11) +/- P12, det(P) ), upper sign for family 2."""
    sgn = 1.0 if family == 2 else -1.0
    P11, P12, P22 = side.P11, side.P12, side.P22
    return (side.h, side.u, P11,
            side.v * math.sqrt(P11) + sgn * P12,
            P11 * P22 - P12 * P12)


def contact_invariants(side: SideData, params: ModelParams) -> tuple:
    """Invariants of the double contact: ( u, v, R12, total pressure )."""
    return (side.u, side.v, side.R12, side.pi(params.g))


def hugoniot_R11(z: float, side: SideData, params: ModelParams) -> float:
    """Depth-weighted normal stress on the shock locus through ``side``.

    z = h_post/h_pre parameterizes the locus; defined for z in (1/2, 2),
    diverging at both ends.  Equals R11 at z = 1.
    """
    if not 0.5 < z < 2.0:
        raise DomainError(f"shock locus needs z in (1/2, 2), got {z}")
    zm = z - 1.0
    return ((2.0 * z - 1.0) * side.R11
            + 0.5 * params.g * side.h ** 2 * zm ** 3) / (2.0 - z)


def f_total_pressure(z: float, side: SideData, params: ModelParams) -> float:
    """Total pressure reached behind the extreme wave at depth ratio z.

    Rarefaction branch (z <= 1) uses the fan invariants; shock branch
    (z > 1) the locus of hugoniot_R11.  Value and slope match at z = 1.
    """
    if not 0.0 < z < 2.0:
        raise DomainError(f"z must lie in (0, 2), got {z}")
    hydro = 0.5 * params.g * (z * side.h) ** 2
    if z <= 1.0:
        return z ** 3 * side.R11 + hydro
    return hugoniot_R11(z, side, params) + hydro


def df_dz(z: float, side: SideData, params: ModelParams) -> float:
    if not 0.0 < z < 2.0:
        raise DomainError(f"z must lie in (0, 2), got {z}")
    gh2 = params.g * side.h ** 2
    if z <= 1.0:
        return 3.0 * z * z * side.R11 + gh2 * z
    return (3.0 * side.R11 + 0.5 * gh2 * (z * z - 4.0 * z + 5.0)) \
        / (2.0 - z) ** 2


def g_velocity(z: float, side: SideData, params: ModelParams,
               sign: float) -> float:
    """Velocity reached behind the extreme wave at depth ratio z.

    sign = -1 for the left (1-) wave, +1 for the right (6-) wave.  The shock
    branch encodes the velocity jump
    u_post - u_pre = -/+ sqrt((h_post - h_pre)(pi_post - pi_pre)/(h_post*h_pre)).
    """
    if not 0.0 < z < 2.0:
        raise DomainError(f"z must lie in (0, 2), got {z}")
    if z <= 1.0:
        return side.u + sign * (afun(z * side.h, side.c, params)
                                - afun(side.h, side.c, params))
    dpi = f_total_pressure(z, side, params) - side.pi(params.g)
    return side.u + sign * math.sqrt((z - 1.0) * dpi / (z * side.h))


def dg_dz(z: float, side: SideData, params: ModelParams, sign: float) -> float:
    if not 0.0 < z < 2.0:
        raise DomainError(f"z must lie in (0, 2), got {z}")
    g, h, R11 = params.g, side.h, side.R11
    if z <= 1.0:
        return sign * math.sqrt(g * h * z + 3.0 * z * z * R11 / h) / z
    num = 6.0 * R11 + 0.5 * g * h * h * (z ** 3 - 3.0 * z * z + 6.0)
    den = (2.0 * (z * (2.0 - z)) ** 1.5 * math.sqrt(h)
           * math.sqrt(3.0 * R11 + 0.5 * g * h * h * (3.0 - z)))
    return sign * num / den


def lax_admissible_shock(left: PrimitiveState, right: PrimitiveState,
                         S: float, family: int, params: ModelParams) -> bool:
    """Strict Lax inequalities for a 1- or 6-shock between spatial neighbors:
    lambda_fam(left) > S > lambda_fam(right)."""
    g = params.g
    if family == 1:
        lam_l = left.v1 - left.a(g)
        lam_r = right.v1 - right.a(g)
    else:
        lam_l = left.v1 + left.a(g)
        lam_r = right.v1 + right.a(g)
    return lam_l > S > lam_r


def jump_residuals(left: PrimitiveState, right: PrimitiveState, S: float,
                   params: ModelParams) -> np.ndarray:
    """Residual of the six generalized jump conditions across a discontinuity
    moving at speed S:  F_R - F_L + B(m_avg)*(h_R - h_L) - S*(U_R - U_L).

    Zero (to rounding) for every admissible wave of the model: shocks on the
    locus, shear and contact discontinuities, and trivial jumps.
    """
    uL = prim_to_cons(left)
    uR = prim_to_cons(right)
    m_avg = (0.5 * (uL.m1 + uR.m1), 0.5 * (uL.m2 + uR.m2))
    return (physical_flux(uR, params) - physical_flux(uL, params)
            + noncons_term(m_avg, right.h - left.h, params)
            - S * (uR.as_array() - uL.as_array()))


def energy_jump_residual(left: PrimitiveState, right: PrimitiveState,
                         S: float, params: ModelParams) -> float:
    """Residual of the total-energy jump relation

        [ (E + R11 + g h^2/2) u + R12 v ] = S [E]

    which is implied by the six generalized jump conditions (the energy
    equation needs no path: it is conservative)."""
    def energy_flux(q):
        E = total_energy(q, params)
        return ((E + q.h * q.P11 + 0.5 * params.g * q.h * q.h) * q.v1
                + q.h * q.P12 * q.v2)

    return (energy_flux(right) - energy_flux(left)
            - S * (total_energy(right, params) - total_energy(left, params)))

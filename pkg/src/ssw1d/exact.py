"""Exact solution of the Riemann problem.

The solution structure is (left to right): a 1-wave that is a rarefaction or
a shock, a 2-shear wave, a double contact, a 5-shear wave, and a 6-wave
(rarefaction or shock), separating four intermediate states that share one
velocity u* and one total pressure Pi*.

The two depth ratios (zL, zR) = (h_*L/h_L, h_*R/h_R) solve a 2x2 nonlinear
system: total pressure and velocity reached behind the 1-wave must match
those reached behind the 6-wave.  A damped Newton iteration from (1, 1)
solves it; z <= 1 selects the rarefaction branch of the wave relations and
z > 1 the shock branch.  Once (zL, zR) are known, the transverse fields of
the intermediate states follow from Riemann invariants on rarefaction sides
and from a linear 2x2 jump system on shock sides, and the shear/contact
layers are resolved by their own invariants.

When the initial velocity divergence is too strong (or an input is already
dry), no star region exists and the solution opens a vacuum between two
rarefaction fans.

All states returned are primitive; ``sample`` evaluates the self-similar
solution at xi = x/t, returning the downstream (right) limit when xi falls
exactly on a discontinuity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import (
    VACUUM,
    DomainError,
    ModelParams,
    PrimitiveState,
)
from .waves import (
    SideData,
    WaveFamily,
    afun,
    df_dz,
    dg_dz,
    f_total_pressure,
    g_velocity,
    hugoniot_R11,
    rarefaction_h_of_xi,
)

# |z - 1| below this is treated as "no wave" rather than a zero-strength
# shock or fan
DEGENERATE_Z = 1e-12


class NoConvergence(RuntimeError):
    """Newton iteration failed to reach the residual tolerance."""


class SingularSystem(ArithmeticError):
    """A linear system that is provably regular came out singular."""


class VacuumFormation(ValueError):
    """The states separate too fast for a star region to exist."""


@dataclass(frozen=True)
class NewtonConfig:
    tol: float = 1e-6
    max_iter: int = 100
    z0: tuple[float, float] = (1.0, 1.0)


@dataclass(frozen=True)
class StarSolution:
    """Self-similar Riemann solution.

    ``states`` holds (U_L, U_*L, U_**L, U_**R, U_*R, U_R).  Speed pairs are
    spatially ascending (head, tail) intervals for fans and collapse to
    (S, S) for shocks; they are ``None`` on a side whose input state is dry.
    For vacuum solutions the inner-wave speeds are NaN and the open interval
    between ``left_speeds[1]`` and ``right_speeds[0]`` is dry.
    """

    params: ModelParams
    zL: float
    zR: float
    u_star: float
    pi_star: float
    left_wave: WaveFamily
    right_wave: WaveFamily
    states: tuple
    left_speeds: tuple | None
    shear_speed_L: float
    contact_speed: float
    shear_speed_R: float
    right_speeds: tuple | None
    vacuum: bool = False

    @property
    def slowest(self) -> float:
        return self.left_speeds[0] if self.left_speeds else self.right_speeds[0]

    @property
    def fastest(self) -> float:
        return self.right_speeds[1] if self.right_speeds else self.left_speeds[1]


def _riemann_condition_gap(left: SideData, right: SideData,
                           params: ModelParams) -> float:
    """Positive iff a star region exists (no vacuum opens)."""
    return (afun(left.h, left.c, params) + afun(right.h, right.c, params)
            - (right.u - left.u))


def _fd_df(z, side, params, step=1e-7):
    lo, hi = z - step, z + step
    if hi >= 2.0:
        return (f_total_pressure(z, side, params)
                - f_total_pressure(lo, side, params)) / step
    if lo <= 0.0:
        return (f_total_pressure(hi, side, params)
                - f_total_pressure(z, side, params)) / step
    return (f_total_pressure(hi, side, params)
            - f_total_pressure(lo, side, params)) / (2.0 * step)


def _fd_dg(z, side, params, sign, step=1e-7):
    lo, hi = z - step, z + step
    if hi >= 2.0:
        return (g_velocity(z, side, params, sign)
                - g_velocity(lo, side, params, sign)) / step
    if lo <= 0.0:
        return (g_velocity(hi, side, params, sign)
                - g_velocity(z, side, params, sign)) / step
    return (g_velocity(hi, side, params, sign)
            - g_velocity(lo, side, params, sign)) / (2.0 * step)


def _damped_update(z, dz):
    # smallest halving that keeps the component inside (0, 2)
    for _ in range(80):
        cand = z + dz
        if 0.0 < cand < 2.0:
            return cand
        dz *= 0.5
    return z


def solve_star(left: PrimitiveState, right: PrimitiveState,
               params: ModelParams,
               cfg: NewtonConfig = NewtonConfig()) -> tuple:
    """Depth ratios, star velocity and star total pressure.

    Newton iteration on F(z1, z2) = f(z1; L) - f(z2; R) and
    G(z1, z2) = g_-(z1; L) - g_+(z2; R), damped componentwise so iterates
    stay inside (0, 2)^2.  Closed-form Jacobian away from z = 2, central
    differences within 1e-6 of it.

    Raises VacuumFormation when the velocity gap admits no star region and
    NoConvergence if the residual tolerance is not met in max_iter steps.
    """
    sl = SideData.from_primitive(left)
    sr = SideData.from_primitive(right)
    if left.is_vacuum() or right.is_vacuum() or \
            _riemann_condition_gap(sl, sr, params) <= 0.0:
        raise VacuumFormation(
            "no star region: velocity gap reaches the dry-state bound")

    z1, z2 = cfg.z0
    for _ in range(cfg.max_iter):
        F = f_total_pressure(z1, sl, params) - f_total_pressure(z2, sr, params)
        G = g_velocity(z1, sl, params, -1.0) - g_velocity(z2, sr, params, 1.0)
        if abs(F) < cfg.tol and abs(G) < cfg.tol:
            break
        j00 = _fd_df(z1, sl, params) if abs(2.0 - z1) < 1e-6 \
            else df_dz(z1, sl, params)
        j10 = _fd_dg(z1, sl, params, -1.0) if abs(2.0 - z1) < 1e-6 \
            else dg_dz(z1, sl, params, -1.0)
        j01 = -(_fd_df(z2, sr, params) if abs(2.0 - z2) < 1e-6
                else df_dz(z2, sr, params))
        j11 = -(_fd_dg(z2, sr, params, 1.0) if abs(2.0 - z2) < 1e-6
                else dg_dz(z2, sr, params, 1.0))
        det = j00 * j11 - j01 * j10
        if det == 0.0 or not math.isfinite(det):
            raise SingularSystem("Newton Jacobian is singular")
        dz1 = (-F * j11 + G * j01) / det
        dz2 = (-G * j00 + F * j10) / det
        z1 = _damped_update(z1, dz1)
        z2 = _damped_update(z2, dz2)
    else:
        raise NoConvergence(
            f"no root to tol {cfg.tol} in {cfg.max_iter} iterations "
            f"(z = ({z1}, {z2}))")

    u_star = 0.5 * (g_velocity(z1, sl, params, -1.0)
                    + g_velocity(z2, sr, params, 1.0))
    pi_star = 0.5 * (f_total_pressure(z1, sl, params)
                     + f_total_pressure(z2, sr, params))
    return z1, z2, u_star, pi_star


def shock_speed(side: SideData, z: float, u_star: float,
                params: ModelParams, family: int) -> float:
    """Propagation speed of a 1- or 6-shock of strength z through ``side``.

    Closed form u -/+ sqrt( z/(2-z) * (3*P11 + g*h*(3-z)/2) ); equivalent to
    the mass-balance form (z*u_star - u)/(z - 1).
    """
    if not 1.0 < z < 2.0:
        raise DomainError(f"shock strength needs z in (1, 2), got {z}")
    root = math.sqrt(z / (2.0 - z)
                     * (3.0 * side.P11 + 0.5 * params.g * side.h * (3.0 - z)))
    return side.u - root if family == 1 else side.u + root


def transverse_star_state(side: SideData, z: float, u_star: float, S: float,
                          params: ModelParams) -> tuple:
    """Transverse fields behind a 1-shock: (v_star, R12_star, R22_star).

    The third and fifth jump conditions form a linear 2x2 system for
    (v_star, R12_star) whose determinant equals the pre-shock total pressure
    (positive, so the system is always solvable); the sixth condition then
    yields R22_star.
    """
    g = params.g
    h, u, v = side.h, side.u, side.v
    hs = z * h
    R11s = hugoniot_R11(z, side, params)
    E12 = 0.5 * side.R12 + 0.5 * h * u * v
    E22 = 0.5 * side.R22 + 0.5 * h * v * v

    m00 = hs * (u_star - S)
    m01 = 1.0
    m10 = (0.5 * R11s + 0.5 * hs * u_star * (u_star - S)
           + 0.25 * g * hs * (hs - h))
    m11 = u_star - 0.5 * S
    a1 = h * (u - S) * v + side.R12
    a2 = ((u - S) * E12 + 0.5 * (side.R11 * v + side.R12 * u)
          - 0.25 * g * h * v * (hs - h))

    det = m00 * m11 - m01 * m10
    pi_pre = side.pi(g)
    if abs(det - pi_pre) > 1e-8 * max(1.0, pi_pre):
        raise SingularSystem(
            f"transverse system determinant {det} strays from the "
            f"pre-shock total pressure {pi_pre}")
    v_star = (a1 * m11 - a2 * m01) / det
    R12_star = (a2 * m00 - a1 * m10) / det
    E22_star = ((u - S) * E22 - (R12_star * v_star - side.R12 * v)) \
        / (u_star - S)
    R22_star = 2.0 * E22_star - hs * v_star * v_star
    return v_star, R12_star, R22_star


def _mirror_q(q: PrimitiveState) -> PrimitiveState:
    return PrimitiveState(q.h, -q.v1, q.v2, q.P11, -q.P12, q.P22)


def _classify(z: float, family: int) -> WaveFamily:
    if abs(z - 1.0) <= DEGENERATE_Z:
        return WaveFamily.NONE
    if z < 1.0:
        return WaveFamily.RAREFACTION_1 if family == 1 \
            else WaveFamily.RAREFACTION_6
    return WaveFamily.SHOCK_1 if family == 1 else WaveFamily.SHOCK_6


def _outer_wave(q: PrimitiveState, z: float, u_star: float,
                params: ModelParams, family: int):
    """Star state and speed interval of the 1- or 6-wave on one side.

    Works in the family-1 orientation; family 6 is handled by mirroring the
    side, reusing the family-1 algebra, and mirroring back.  Returns
    (wave_kind, star_state, (head, tail) ascending in x).
    """
    if family == 6:
        kind, star_m, speeds_m = _outer_wave(_mirror_q(q), z, -u_star,
                                             params, 1)
        if kind is WaveFamily.RAREFACTION_1:
            kind = WaveFamily.RAREFACTION_6
        elif kind is WaveFamily.SHOCK_1:
            kind = WaveFamily.SHOCK_6
        return kind, _mirror_q(star_m), (-speeds_m[1], -speeds_m[0])

    g = params.g
    side = SideData.from_primitive(q)
    kind = _classify(z, 1)

    if kind is WaveFamily.NONE:
        lam = q.v1 - q.a(g)
        return kind, q, (lam, lam)

    if kind is WaveFamily.RAREFACTION_1:
        hs = z * q.h
        c = side.c
        P11s = c * hs * hs
        beta = q.P12 / (g * q.h + 2.0 * q.P11)
        dA = afun(q.h, c, params) - afun(hs, c, params)
        v_s = q.v2 + 2.0 * beta * dA
        P12s = beta * (g * hs + 2.0 * P11s)
        s_ent = (q.P11 * q.P22 - q.P12 ** 2) / (q.h * q.h)
        P22s = (s_ent * hs * hs + P12s * P12s) / P11s
        star = PrimitiveState(hs, u_star, v_s, P11s, P12s, P22s)
        head = q.v1 - q.a(g)
        tail = u_star - math.sqrt(g * hs + 3.0 * P11s)
        return kind, star, (head, tail)

    S = shock_speed(side, z, u_star, params, 1)
    hs = z * q.h
    R11s = hugoniot_R11(z, side, params)
    v_s, R12s, R22s = transverse_star_state(side, z, u_star, S, params)
    star = PrimitiveState(hs, u_star, v_s, R11s / hs, R12s / hs, R22s / hs)
    return kind, star, (S, S)


def build_solution(left: PrimitiveState, right: PrimitiveState,
                   params: ModelParams,
                   cfg: NewtonConfig = NewtonConfig()) -> StarSolution:
    """Full wave structure of the Riemann problem (vacuum cases included)."""
    try:
        zL, zR, u_star, pi_star = solve_star(left, right, params, cfg)
    except VacuumFormation:
        return vacuum_solution(left, right, params)

    lw, star_L, lsp = _outer_wave(left, zL, u_star, params, 1)
    rw, star_R, rsp = _outer_wave(right, zR, u_star, params, 6)

    # shear layers: h, u, P11 continue; (v, P12) rotate through the double
    # contact under the 2-/5-invariants v*sqrt(P11) +/- P12 and det(P)
    alpha = math.sqrt(star_L.P11)
    beta = math.sqrt(star_R.P11)
    hL_, hR_ = star_L.h, star_R.h
    R12L = hL_ * star_L.P12
    R12R = hR_ * star_R.P12
    denom = hL_ * alpha + hR_ * beta
    v_dd = (hL_ * alpha * star_L.v2 + hR_ * beta * star_R.v2
            + R12L - R12R) / denom
    R12_dd = hL_ * alpha * (star_L.v2 - v_dd) + R12L

    P12_ddL = R12_dd / hL_
    P22_ddL = (star_L.det_P() + P12_ddL ** 2) / star_L.P11
    P12_ddR = R12_dd / hR_
    P22_ddR = (star_R.det_P() + P12_ddR ** 2) / star_R.P11
    dstar_L = PrimitiveState(hL_, u_star, v_dd, star_L.P11, P12_ddL, P22_ddL)
    dstar_R = PrimitiveState(hR_, u_star, v_dd, star_R.P11, P12_ddR, P22_ddR)

    return StarSolution(
        params=params,
        zL=zL, zR=zR, u_star=u_star, pi_star=pi_star,
        left_wave=lw, right_wave=rw,
        states=(left, star_L, dstar_L, dstar_R, star_R, right),
        left_speeds=lsp,
        shear_speed_L=u_star - alpha,
        contact_speed=u_star,
        shear_speed_R=u_star + beta,
        right_speeds=rsp,
    )


def vacuum_solution(left: PrimitiveState, right: PrimitiveState,
                    params: ModelParams) -> StarSolution:
    """Two rarefaction fans (one per wet side) enclosing a dry region.

    Covers dry-input problems and wet pairs separating faster than the
    existence bound; in the marginal equal case the dry interval collapses
    to a point.
    """
    nan = math.nan
    lsp = rsp = None
    if not left.is_vacuum():
        sl = SideData.from_primitive(left)
        lsp = (left.v1 - left.a(params.g),
               left.v1 + afun(left.h, sl.c, params))
    if not right.is_vacuum():
        sr = SideData.from_primitive(right)
        rsp = (right.v1 - afun(right.h, sr.c, params),
               right.v1 + right.a(params.g))
    return StarSolution(
        params=params,
        zL=0.0, zR=0.0, u_star=nan, pi_star=0.0,
        left_wave=WaveFamily.NONE if left.is_vacuum()
        else WaveFamily.RAREFACTION_1,
        right_wave=WaveFamily.NONE if right.is_vacuum()
        else WaveFamily.RAREFACTION_6,
        states=(left, VACUUM, VACUUM, VACUUM, VACUUM, right),
        left_speeds=lsp,
        shear_speed_L=nan, contact_speed=nan, shear_speed_R=nan,
        right_speeds=rsp,
        vacuum=True,
    )


def _fan_state(q: PrimitiveState, xi: float, head: float,
               params: ModelParams, family: int) -> PrimitiveState:
    """Interior of a rarefaction fan at similarity coordinate xi, built from
    the five invariants of the family anchored at the outer state ``q``."""
    g = params.g
    side = SideData.from_primitive(q)
    c = side.c
    sgn = 1.0 if family == 1 else -1.0
    h = rarefaction_h_of_xi(xi, (head, q.h), c, params, family)
    if h <= 0.0:
        return VACUUM
    dA = afun(q.h, c, params) - afun(h, c, params)
    beta = q.P12 / (g * q.h + 2.0 * q.P11)
    P11 = c * h * h
    P12 = beta * (g * h + 2.0 * P11)
    s_ent = (q.P11 * q.P22 - q.P12 ** 2) / (q.h * q.h)
    P22 = (s_ent * h * h + P12 * P12) / P11
    return PrimitiveState(h, q.v1 + sgn * dA, q.v2 + sgn * 2.0 * beta * dA,
                          P11, P12, P22)


def sample(sol: StarSolution, xi: float,
           params: ModelParams | None = None) -> PrimitiveState:
    """Evaluate the self-similar solution at xi = x/t.

    At a similarity coordinate that exactly equals a discontinuity speed the
    downstream (right) limit is returned, so sweeps over sorted xi values
    are deterministic.
    """
    params = params or sol.params
    left, star_L, dstar_L, dstar_R, star_R, right = sol.states

    if sol.vacuum:
        if sol.left_speeds is not None:
            head, front = sol.left_speeds
            if xi < head:
                return left
            if xi < front:
                return _fan_state(left, xi, head, params, 1)
        if sol.right_speeds is not None:
            front, head = sol.right_speeds
            if xi > head:
                return right
            if xi > front:
                return _fan_state(right, xi, head, params, 6)
        return VACUUM

    head_L, tail_L = sol.left_speeds
    tail_R, head_R = sol.right_speeds
    if xi < head_L:
        return left
    if xi < tail_L:
        return _fan_state(left, xi, head_L, params, 1)
    if xi < sol.shear_speed_L:
        return star_L
    if xi < sol.contact_speed:
        return dstar_L
    if xi < sol.shear_speed_R:
        return dstar_R
    if xi < tail_R:
        return star_R
    if xi < head_R:
        return _fan_state(right, xi, head_R, params, 6)
    return right


def single_shock_right_state(left: PrimitiveState, z: float,
                             params: ModelParams) -> tuple:
    """Right state connected to ``left`` by exactly one 1-shock of strength
    z in (1, 2), and the shock speed.  The pair solves the Riemann problem
    with a single wave."""
    if not 1.0 < z < 2.0:
        raise DomainError(f"shock strength needs z in (1, 2), got {z}")
    side = SideData.from_primitive(left)
    hs = z * left.h
    R11s = hugoniot_R11(z, side, params)
    u_star = g_velocity(z, side, params, -1.0)
    S = shock_speed(side, z, u_star, params, 1)
    v_s, R12s, R22s = transverse_star_state(side, z, u_star, S, params)
    right = PrimitiveState(hs, u_star, v_s, R11s / hs, R12s / hs, R22s / hs)
    return right, S

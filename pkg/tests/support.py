"""Helpers shared by the solver test modules.

Mostly machinery for holding a computed wave structure against the jump
relations of the model, plus small state-comparison utilities.
"""

from __future__ import annotations

import numpy as np

from ssw1d.exact import StarSolution, sample
from ssw1d.model import ModelParams, PrimitiveState, physical_flux, prim_to_cons
from ssw1d.waves import (
    SideData,
    WaveFamily,
    energy_jump_residual,
    jump_residuals,
    rarefaction_invariants,
)


def residual_scale(left, right, S, params):
    # magnitude of the largest term entering the jump balance, per component
    uL, uR = prim_to_cons(left), prim_to_cons(right)
    fl = np.abs(physical_flux(uL, params))
    fr = np.abs(physical_flux(uR, params))
    du = np.abs(S * (uR.as_array() - uL.as_array()))
    return np.maximum(np.maximum(fl, fr), du) + 1e-30


def states_close(a: PrimitiveState, b: PrimitiveState,
                 tol: float = 1e-12) -> bool:
    va, vb = a.as_array(), b.as_array()
    scale = max(1.0, np.max(np.abs(va)), np.max(np.abs(vb)))
    return float(np.max(np.abs(va - vb))) <= tol * scale


def solution_discontinuities(sol: StarSolution):
    """(upstream, downstream, speed, label) for every jump in a solution."""
    if sol.vacuum:
        return []
    L, sL, dL, dR, sR, R = sol.states
    jumps = [(sL, dL, sol.shear_speed_L, "2-shear"),
             (dL, dR, sol.contact_speed, "contact"),
             (dR, sR, sol.shear_speed_R, "5-shear")]
    if sol.left_wave is WaveFamily.SHOCK_1:
        jumps.insert(0, (L, sL, sol.left_speeds[0], "1-shock"))
    if sol.right_wave is WaveFamily.SHOCK_6:
        jumps.append((sR, R, sol.right_speeds[1], "6-shock"))
    return jumps


def assert_jump_conditions(sol: StarSolution, params: ModelParams,
                           tol: float = 1e-10) -> None:
    for up, dn, S, label in solution_discontinuities(sol):
        res = np.abs(jump_residuals(up, dn, S, params))
        scale = residual_scale(up, dn, S, params)
        # components whose balance terms all vanish still accumulate
        # roundoff from the largest terms elsewhere in the state
        bad = (res > tol * scale) & (res > 1e-14 * scale.max())
        assert not bad.any(), \
            f"{label}: residuals {res[bad]} exceed {tol} x scale"
        e_res = energy_jump_residual(up, dn, S, params)
        assert abs(e_res) <= tol * max(1.0, abs(S)), \
            f"{label}: energy residual {e_res}"


def fan_invariant_errors(sol: StarSolution, family: int,
                         params: ModelParams, n: int = 50) -> np.ndarray:
    """Largest relative drift of each fan invariant over n interior samples,
    measured against the outer edge state."""
    if family == 1:
        head, tail = sol.left_speeds
        edge = sol.states[0]
    else:
        tail, head = sol.right_speeds
        edge = sol.states[5]
    ref = np.asarray(rarefaction_invariants(
        SideData.from_primitive(edge), family, params))
    scale = np.maximum(1.0, np.abs(ref))
    worst = np.zeros(len(ref))
    for t in (np.arange(n) + 0.5) / n:
        xi = head + (tail - head) * t
        q = sample(sol, xi)
        inv = np.asarray(rarefaction_invariants(
            SideData.from_primitive(q), family, params))
        worst = np.maximum(worst, np.abs(inv - ref) / scale)
    return worst

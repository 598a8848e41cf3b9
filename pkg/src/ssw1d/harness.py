"""Drivers tying cases, the exact solver and the schemes together.

The functions here produce the artifacts a study needs: sampled exact
profiles, finite-volume runs, convergence tables, and a verification
sweep that holds every built-in case's exact solution against the jump
relations and fan invariants.  Profiles and tables are written as CSV
with a fixed schema so downstream tooling never has to import this
package:

* profile files: header ``x,h,u,v,P11,P12,P22``, one row per sample or
  cell center;
* convergence files: header ``cells,err_h,err_hu,err_hv,err_E11,
  err_E12,err_E22`` with conserved-variable L1 errors.

All floats are printed with 17 significant digits and LF line endings,
so a rerun with identical inputs is byte-identical.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .cases import CaseSpec, builtin_cases
from .exact import NewtonConfig, StarSolution, build_solution, sample
from .fv import (
    Grid,
    SolverKind,
    SpeedMode,
    StateInvalid,
    l1_error,
    step_first_order,
    step_muscl_hancock,
)
from .model import (
    ModelParams,
    cons_to_prim_array,
    physical_flux,
    prim_to_cons,
    prim_to_cons_array,
    total_energy_array,
)
from .waves import (
    SideData,
    WaveFamily,
    energy_jump_residual,
    jump_residuals,
    rarefaction_invariants,
)

PROFILE_HEADER = "x,h,u,v,P11,P12,P22"
CONVERGENCE_HEADER = "cells,err_h,err_hu,err_hv,err_E11,err_E12,err_E22"

# star roots are solved tightly so sampled profiles are reference-grade
_REFERENCE_NEWTON = NewtonConfig(tol=1e-12)


@dataclass(frozen=True)
class RunConfig:
    """Knobs for one finite-volume run."""

    cells: int = 200
    order: int = 2
    solver: SolverKind = SolverKind.HLLC5
    cfl: float = 0.45
    speed_mode: SpeedMode = SpeedMode.APPROXIMATE
    out: str | None = None
    samples: int = 1000

    def __post_init__(self):
        if self.cells < 10:
            raise ValueError("need at least 10 cells")
        if self.order not in (1, 2):
            raise ValueError("order must be 1 or 2")
        if self.samples < 2:
            raise ValueError("need at least 2 samples")


@dataclass(frozen=True)
class SolveResult:
    """Final grid plus the total-energy history of the run."""

    grid: Grid
    t: float
    times: np.ndarray
    energies: np.ndarray


def params_for(case: CaseSpec) -> ModelParams:
    return ModelParams(g=case.g)


def exact_solution(case: CaseSpec) -> StarSolution:
    return build_solution(case.left, case.right, params_for(case),
                          _REFERENCE_NEWTON)


def exact_profile(case: CaseSpec, samples: int, t: float | None = None):
    """Sampled exact solution at time t; returns (x, primitive rows)."""
    t = case.t_final if t is None else t
    if t <= 0.0:
        raise ValueError("profile time must be positive")
    sol = exact_solution(case)
    xs = np.linspace(case.domain[0], case.domain[1], samples)
    Q = np.empty((6, samples))
    for i, x in enumerate(xs):
        Q[:, i] = sample(sol, (x - case.x0) / t).as_array()
    return xs, Q


def initial_grid(case: CaseSpec, cells: int) -> Grid:
    lo, hi = case.domain
    xs = lo + (np.arange(cells) + 0.5) * (hi - lo) / cells
    Q = np.where(xs < case.x0,
                 case.left.as_array().reshape(6, 1),
                 case.right.as_array().reshape(6, 1))
    return Grid(lo, hi, prim_to_cons_array(Q))


def _grid_energy(grid: Grid, g: float) -> float:
    Q = cons_to_prim_array(grid.u)
    return float(total_energy_array(Q, g).sum() * grid.dx)


def solve_case(case: CaseSpec, cfg: RunConfig) -> SolveResult:
    """Advance the case to its final time with the configured scheme."""
    params = params_for(case)
    grid = initial_grid(case, cfg.cells)
    stepper = step_first_order if cfg.order == 1 else step_muscl_hancock
    t, tf = 0.0, case.t_final
    times = [0.0]
    energies = [_grid_energy(grid, case.g)]
    while tf - t > 1e-12 * max(tf, 1.0):
        try:
            grid, dt = stepper(grid, params, solver=cfg.solver,
                               cfl=cfg.cfl, mode=cfg.speed_mode,
                               dt_cap=tf - t)
        except StateInvalid as err:
            raise StateInvalid(
                err.index,
                f"case {case.name!r} at t={t:.6g}: {err}") from err
        t += dt
        times.append(t)
        energies.append(_grid_energy(grid, case.g))
    return SolveResult(grid, t, np.asarray(times), np.asarray(energies))


def _format(v) -> str:
    # the add folds negative zero into plain zero before printing
    return f"{float(v) + 0.0:.17g}"


def write_profile_csv(path: str, xs: np.ndarray, Q: np.ndarray) -> None:
    with open(path, "w", newline="") as f:
        f.write(PROFILE_HEADER + "\n")
        for i in range(xs.size):
            row = [_format(xs[i])] + [_format(Q[k, i]) for k in range(6)]
            f.write(",".join(row) + "\n")


def run_exact(case: CaseSpec, samples: int, t: float | None,
              out: str) -> str:
    xs, Q = exact_profile(case, samples, t)
    write_profile_csv(out, xs, Q)
    return out


def run_fv(case: CaseSpec, cfg: RunConfig) -> SolveResult:
    result = solve_case(case, cfg)
    if cfg.out is not None:
        write_profile_csv(cfg.out, result.grid.centers(),
                          cons_to_prim_array(result.grid.u))
    return result


def convergence_table(case: CaseSpec, cfg: RunConfig,
                      cells_list) -> np.ndarray:
    """Rows of (cells, per-component conserved L1 error vs exact)."""
    sol = exact_solution(case)
    params = params_for(case)
    rows = np.empty((len(cells_list), 7))
    for i, n in enumerate(cells_list):
        result = solve_case(case, replace(cfg, cells=int(n)))
        err = l1_error(result.grid, sol, case.t_final, case.x0, params)
        rows[i, 0] = n
        rows[i, 1:] = err
    return rows


def run_convergence(case: CaseSpec, cfg: RunConfig, cells_list,
                    out: str) -> str:
    rows = convergence_table(case, cfg, cells_list)
    with open(out, "w", newline="") as f:
        f.write(CONVERGENCE_HEADER + "\n")
        for row in rows:
            f.write(",".join([str(int(row[0]))]
                             + [_format(v) for v in row[1:]]) + "\n")
    return out


# --- verification sweep ---

def _residual_scale(up, dn, S, params):
    uL, uR = prim_to_cons(up), prim_to_cons(dn)
    fl = np.abs(physical_flux(uL, params))
    fr = np.abs(physical_flux(uR, params))
    du = np.abs(S * (uR.as_array() - uL.as_array()))
    return np.maximum(np.maximum(fl, fr), du) + 1e-30


def _discontinuities(sol: StarSolution):
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


def _fan_drift(sol: StarSolution, family: int, params: ModelParams,
               n: int = 50) -> float:
    if family == 1:
        head, tail = sol.left_speeds
        edge = sol.states[0]
    else:
        tail, head = sol.right_speeds
        edge = sol.states[5]
    ref = np.asarray(rarefaction_invariants(
        SideData.from_primitive(edge), family, params))
    scale = np.maximum(1.0, np.abs(ref))
    worst = 0.0
    for s in (np.arange(n) + 0.5) / n:
        xi = head + (tail - head) * s
        inv = np.asarray(rarefaction_invariants(
            SideData.from_primitive(sample(sol, xi)), family, params))
        worst = max(worst, float(np.max(np.abs(inv - ref) / scale)))
    return worst


def verify_case(case: CaseSpec, jump_tol: float = 1e-10,
                fan_tol: float = 1e-8) -> list:
    """Failure descriptions for one case's exact solution (empty = pass)."""
    params = params_for(case)
    sol = exact_solution(case)
    failures = []
    for up, dn, S, label in _discontinuities(sol):
        res = np.abs(jump_residuals(up, dn, S, params))
        scale = _residual_scale(up, dn, S, params)
        bad = (res > jump_tol * scale) & (res > 1e-14 * scale.max())
        if bad.any():
            failures.append(
                f"{label}: jump residual {res.max():.3e} beyond tolerance")
        e_res = abs(energy_jump_residual(up, dn, S, params))
        if e_res > jump_tol * max(1.0, abs(S)):
            failures.append(f"{label}: energy residual {e_res:.3e}")
    if sol.left_wave is WaveFamily.RAREFACTION_1:
        drift = _fan_drift(sol, 1, params)
        if drift > fan_tol:
            failures.append(f"left fan: invariant drift {drift:.3e}")
    if sol.right_wave is WaveFamily.RAREFACTION_6:
        drift = _fan_drift(sol, 6, params)
        if drift > fan_tol:
            failures.append(f"right fan: invariant drift {drift:.3e}")
    return failures


def verify_all() -> list:
    """(case name, failure list) for every built-in case."""
    return [(case.name, verify_case(case)) for case in builtin_cases()]

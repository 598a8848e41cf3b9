"""Exact Riemann solver and path-conservative finite-volume schemes for the
1-D shear shallow water equations."""

from .cases import CaseSpec, builtin_cases, case_names, get_case
from .exact import (
    NewtonConfig,
    NoConvergence,
    StarSolution,
    VacuumFormation,
    build_solution,
    sample,
    single_shock_right_state,
    solve_star,
    vacuum_solution,
)
from .fv import (
    DegenerateSpeeds,
    Grid,
    SolverKind,
    SpeedMode,
    StateInvalid,
    compute_dt,
    estimate_speeds,
    l1_error,
    step_first_order,
    step_muscl_hancock,
)
from .harness import (
    RunConfig,
    SolveResult,
    convergence_table,
    exact_profile,
    initial_grid,
    run_convergence,
    run_exact,
    run_fv,
    solve_case,
    verify_all,
    verify_case,
)
from .model import (
    GRAVITY,
    ConservedState,
    ModelParams,
    PrimitiveState,
    cons_to_prim,
    prim_to_cons,
)
from .waves import WaveFamily

__all__ = [
    "GRAVITY",
    "CaseSpec",
    "ConservedState",
    "DegenerateSpeeds",
    "Grid",
    "ModelParams",
    "NewtonConfig",
    "NoConvergence",
    "PrimitiveState",
    "RunConfig",
    "SolveResult",
    "SolverKind",
    "SpeedMode",
    "StarSolution",
    "StateInvalid",
    "VacuumFormation",
    "WaveFamily",
    "build_solution",
    "builtin_cases",
    "case_names",
    "compute_dt",
    "cons_to_prim",
    "convergence_table",
    "estimate_speeds",
    "exact_profile",
    "get_case",
    "initial_grid",
    "l1_error",
    "prim_to_cons",
    "run_convergence",
    "run_exact",
    "run_fv",
    "sample",
    "single_shock_right_state",
    "solve_case",
    "solve_star",
    "step_first_order",
    "step_muscl_hancock",
    "vacuum_solution",
    "verify_all",
    "verify_case",
]

__version__ = "0.1.0"

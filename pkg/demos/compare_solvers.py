"""How the three solvers treat a stationary material interface.

Initial data: zero velocity, equal total longitudinal pressure, but a
jump in depth and stress.  The exact solution is a standing contact, so
any motion the scheme produces is numerical.  The variants that restore
the middle waves keep the interface in the two cells where it started;
the two-wave solver diffuses it a little more every step.
"""

import numpy as np

from ssw1d.fv import Grid, SolverKind, step_first_order
from ssw1d.model import GRAVITY, ModelParams, PrimitiveState, prim_to_cons

params = ModelParams(g=GRAVITY)
left = PrimitiveState(h=0.02, v1=0.0, v2=0.0, P11=1e-4, P12=0.0, P22=1e-4)
right = PrimitiveState(h=0.01, v1=0.0, v2=0.0, P11=0.14735, P12=0.0, P22=2e-4)

for side in (left, right):
    pi = side.h * side.P11 + 0.5 * params.g * side.h**2
    print(f"h={side.h}: total longitudinal pressure = {pi:.6e}")
print()


def transition_cells(h: np.ndarray) -> int:
    tol = 1e-3 * (left.h - right.h)
    inside = (h < left.h - tol) & (h > right.h + tol)
    return int(inside.sum())


n = 100
ul = prim_to_cons(left).as_array()
ur = prim_to_cons(right).as_array()
u0 = np.empty((6, n))
u0[:, : n // 2] = ul.reshape(6, 1)
u0[:, n // 2 :] = ur.reshape(6, 1)

steps = 300
print(f"interface cells after {steps} first-order steps on {n} cells:")
for solver in SolverKind:
    grid = Grid(0.0, 1.0, u0.copy())
    for _ in range(steps):
        grid, _ = step_first_order(grid, params, solver=solver)
    width = transition_cells(grid.u[0])
    drift = np.abs(grid.u[1]).max()
    print(f"  {solver.value:>6}: {width:>3} cells wide, "
          f"max |momentum| = {drift:.3e}")

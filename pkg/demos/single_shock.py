"""Construct a single-shock Riemann problem from scratch.

Starting from a quiescent left state, picks a depth ratio on the shock
branch and derives the matching right state, so the two states connect
through one left-moving shock.  Boosting both velocities by the shock
speed then freezes the shock in place.
"""

from ssw1d.exact import build_solution, single_shock_right_state
from ssw1d.model import ModelParams, PrimitiveState
from ssw1d.waves import jump_residuals, lax_admissible_shock

params = ModelParams()
left = PrimitiveState(0.02, 0.0, 0.0, 1e-4, 0.0, 1e-4)
z = 1.5

right, S = single_shock_right_state(left, z, params)
print(f"left:  h={left.h}, u={left.v1}, P11={left.P11}")
print(f"depth ratio z = {z}")
print(f"right: h={right.h:.17g}, u={right.v1:.17g}, P11={right.P11:.17g}")
print(f"shock speed S = {S:.17g}")

res = jump_residuals(left, right, S, params)
print(f"max jump residual: {max(abs(r) for r in res):.3e}")
print("Lax admissible:",
      lax_admissible_shock(left, right, S, 1, params))

# verify the Riemann solver recovers the designed structure
sol = build_solution(left, right, params)
print(f"solver sees: {sol.left_wave.name} + {sol.right_wave.name} "
      f"(zL={sol.zL:.12g}, zR={sol.zR:.12g})")

# same shock, stationary frame
boosted_left = PrimitiveState(left.h, left.v1 - S, left.v2,
                              left.P11, left.P12, left.P22)
boosted_right = PrimitiveState(right.h, right.v1 - S, right.v2,
                               right.P11, right.P12, right.P22)
print(f"\nstationary frame: u_L = {boosted_left.v1:.17g}, "
      f"u_R = {boosted_right.v1:.17g}")

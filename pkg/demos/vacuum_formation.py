"""Two streams pulling apart until the depth vanishes.

When the separation speed exceeds the combined rarefaction capacity,
the star region dries out: two fans expand toward each other and a
vacuum interval opens between their inner fronts.
"""

import numpy as np

from ssw1d.exact import build_solution, sample
from ssw1d.model import ModelParams, PrimitiveState
from ssw1d.waves import afun

params = ModelParams()
left = PrimitiveState(0.02, -3.0, 0.0, 1e-4, 0.0, 1e-4)
right = PrimitiveState(0.02, 3.0, 0.0, 1e-4, 0.0, 1e-4)

capacity = (afun(left.h, left.P11 / left.h**2, params)
            + afun(right.h, right.P11 / right.h**2, params))
gap = right.v1 - left.v1
print(f"separation speed {gap}, rarefaction capacity {capacity:.6g}")
print(f"vacuum forms: {gap >= capacity}")

sol = build_solution(left, right, params)
print(f"vacuum solution: {sol.vacuum}")
print(f"dry interval fronts: [{sol.left_speeds[1]:.6g}, "
      f"{sol.right_speeds[0]:.6g}]")
print()

print("depth along the profile:")
for xi in np.linspace(-4.0, 4.0, 17):
    q = sample(sol, float(xi))
    tag = "  (dry)" if q.h == 0.0 else ""
    print(f"  xi = {xi:+.1f}:  h = {q.h:.6g}{tag}")

"""Walk through the exact solution of the depth-jump problem.

Solves the star system for the standard 2:1 depth jump, reports the wave
structure, and samples the self-similar profile at a few stations.
"""

from ssw1d.cases import get_case
from ssw1d.exact import NewtonConfig, build_solution, sample
from ssw1d.model import ModelParams

case = get_case("dambreak")
params = ModelParams(case.g)
sol = build_solution(case.left, case.right, params, NewtonConfig(tol=1e-12))

print(f"case: {case.name}  (h {case.left.h} -> {case.right.h})")
print(f"left wave:  {sol.left_wave.name}")
print(f"right wave: {sol.right_wave.name}")
print(f"depth ratios: zL = {sol.zL:.15g}, zR = {sol.zR:.15g}")
print(f"star velocity u* = {sol.u_star:.15g}")
print(f"star total pressure Pi* = {sol.pi_star:.15g}")
print(f"signal range: [{sol.slowest:.15g}, {sol.fastest:.15g}]")
print()

print("self-similar profile (xi = x/t):")
print(f"{'xi':>10} {'h':>12} {'u':>12} {'P11':>12}")
for i in range(-6, 7):
    xi = 0.1 * i
    q = sample(sol, xi)
    print(f"{xi:>10.2f} {q.h:>12.6g} {q.v1:>12.6g} {q.P11:>12.6g}")

from __future__ import annotations

import math

import numpy as np
import pytest

import support
from conftest import sample_state
from ssw1d.exact import (
    DEGENERATE_Z,
    NewtonConfig,
    NoConvergence,
    VacuumFormation,
    build_solution,
    sample,
    shock_speed,
    single_shock_right_state,
    solve_star,
    transverse_star_state,
)
from ssw1d.model import VACUUM, ModelParams, PrimitiveState, total_pressure
from ssw1d.waves import (
    SideData,
    WaveFamily,
    afun,
    g_velocity,
    jump_residuals,
    lax_admissible_shock,
)

DAM_LEFT = PrimitiveState(0.02, 0.0, 0.0, 1e-4, 0.0, 1e-4)
DAM_RIGHT = PrimitiveState(0.01, 0.0, 0.0, 1e-4, 0.0, 1e-4)
Z_DAM = (0.731428410320821, 1.4177231168358784)

TIGHT = NewtonConfig(tol=1e-12)


def random_pair(rng, **kw):
    return (sample_state(rng, h_min=0.05, h_max=2.0, v_max=1.0,
                         p_min=1e-3, p_max=0.5, **kw),
            sample_state(rng, h_min=0.05, h_max=2.0, v_max=1.0,
                         p_min=1e-3, p_max=0.5, **kw))


class TestSolveStar:
    def test_two_depth_roots(self, params):
        zL, zR, u_star, pi_star = solve_star(DAM_LEFT, DAM_RIGHT, params,
                                             TIGHT)
        assert zL == pytest.approx(Z_DAM[0], rel=1e-9)
        assert zR == pytest.approx(Z_DAM[1], rel=1e-9)
        assert u_star > 0.0
        assert pi_star > total_pressure(DAM_RIGHT, params)

    def test_equal_states_trivial(self, rng, params):
        for _ in range(20):
            q = sample_state(rng)
            zL, zR, u_star, pi_star = solve_star(q, q, params, TIGHT)
            assert zL == 1.0 and zR == 1.0
            assert u_star == pytest.approx(q.v1, abs=1e-14)
            assert pi_star == pytest.approx(total_pressure(q, params),
                                            rel=1e-14)

    def test_mirror_symmetry(self, rng, params):
        hits = 0
        while hits < 40:
            left, right = random_pair(rng)
            mleft = PrimitiveState(right.h, -right.v1, right.v2,
                                   right.P11, -right.P12, right.P22)
            mright = PrimitiveState(left.h, -left.v1, left.v2,
                                    left.P11, -left.P12, left.P22)
            try:
                zL, zR, us, ps = solve_star(left, right, params, TIGHT)
                zLm, zRm, usm, psm = solve_star(mleft, mright, params, TIGHT)
            except VacuumFormation:
                continue
            hits += 1
            assert zLm == pytest.approx(zR, rel=1e-12)
            assert zRm == pytest.approx(zL, rel=1e-12)
            assert usm == pytest.approx(-us, abs=1e-12 * max(1.0, abs(us)))
            assert psm == pytest.approx(ps, rel=1e-12)

    def test_separating_states_raise(self, params):
        q = PrimitiveState(0.01, 0.0, 0.0, 1e-4, 0.0, 1e-4)
        fast_left = PrimitiveState(q.h, -5.0, 0.0, q.P11, 0.0, q.P22)
        fast_right = PrimitiveState(q.h, 5.0, 0.0, q.P11, 0.0, q.P22)
        with pytest.raises(VacuumFormation):
            solve_star(fast_left, fast_right, params)

    def test_dry_input_raises(self, params):
        with pytest.raises(VacuumFormation):
            solve_star(DAM_LEFT, VACUUM, params)
        with pytest.raises(VacuumFormation):
            solve_star(VACUUM, DAM_RIGHT, params)

    def test_iteration_budget_enforced(self, params):
        with pytest.raises(NoConvergence):
            solve_star(DAM_LEFT, DAM_RIGHT, params,
                       NewtonConfig(tol=1e-12, max_iter=1))

    def test_default_tolerance_close_to_tight(self, params):
        zL, zR, *_ = solve_star(DAM_LEFT, DAM_RIGHT, params)
        assert zL == pytest.approx(Z_DAM[0], rel=1e-4)
        assert zR == pytest.approx(Z_DAM[1], rel=1e-4)


@pytest.fixture(scope="module")
def sol():
    return build_solution(DAM_LEFT, DAM_RIGHT, ModelParams(), TIGHT)


class TestDamBreakSolution:
    def test_wave_classification(self, sol):
        assert sol.left_wave is WaveFamily.RAREFACTION_1
        assert sol.right_wave is WaveFamily.SHOCK_6

    def test_extreme_speeds(self, sol):
        assert sol.left_speeds[0] == pytest.approx(
            -0.44328320518603004, rel=1e-9)
        assert sol.right_speeds[0] == pytest.approx(
            0.43554139386439333, rel=1e-9)
        assert sol.right_speeds[0] == sol.right_speeds[1]

    def test_speed_ordering(self, sol):
        seq = [sol.left_speeds[0], sol.left_speeds[1], sol.shear_speed_L,
               sol.contact_speed, sol.shear_speed_R, sol.right_speeds[0],
               sol.right_speeds[1]]
        assert all(a <= b + 1e-14 for a, b in zip(seq, seq[1:]))

    def test_star_region_shares_u_and_pi(self, sol, params):
        for q in sol.states[1:5]:
            assert q.v1 == pytest.approx(sol.u_star, abs=1e-11)
            assert total_pressure(q, params) == pytest.approx(
                sol.pi_star, rel=1e-11)

    def test_depth_continuous_across_shears(self, sol):
        assert sol.states[1].h == sol.states[2].h
        assert sol.states[3].h == sol.states[4].h

    def test_jump_conditions(self, sol, params):
        support.assert_jump_conditions(sol, params, tol=1e-10)

    def test_fan_invariants(self, sol, params):
        errs = support.fan_invariant_errors(sol, 1, params, n=50)
        assert (errs <= 1e-8).all()

    def test_sample_outer_regions(self, sol):
        assert sample(sol, sol.left_speeds[0] - 0.05) == DAM_LEFT
        assert sample(sol, sol.right_speeds[1] + 0.05) == DAM_RIGHT

    def test_sample_right_limit_at_jumps(self, sol):
        assert sample(sol, sol.right_speeds[0]) == DAM_RIGHT
        assert sample(sol, sol.shear_speed_L) == sol.states[2]
        assert sample(sol, sol.contact_speed) == sol.states[3]

    def test_sample_continuity_at_fan_edges(self, sol):
        head, tail = sol.left_speeds
        eps = 1e-9
        assert support.states_close(sample(sol, head + eps), DAM_LEFT,
                                    tol=1e-6)
        assert support.states_close(sample(sol, tail - eps), sol.states[1],
                                    tol=1e-6)

    def test_depth_monotone_through_fan(self, sol):
        head, tail = sol.left_speeds
        xs = np.linspace(head, tail, 40)
        hs = [sample(sol, x).h for x in xs]
        assert all(b <= a for a, b in zip(hs, hs[1:]))


class TestShockConstruction:
    def test_reference_single_shock(self, params):
        right, S = single_shock_right_state(DAM_LEFT, 1.5, params)
        assert right.h == pytest.approx(0.03, rel=1e-14)
        assert right.v1 == pytest.approx(-0.22169799277395363, rel=1e-12)
        assert right.P11 == pytest.approx(0.016616666666666658, rel=1e-12)
        assert S == pytest.approx(-0.6650939783218609, rel=1e-12)
        assert right.v2 == 0.0 and right.P12 == 0.0
        assert right.P22 == pytest.approx(1e-4, rel=1e-12)

    def test_round_trip_is_single_wave(self, params):
        right, S = single_shock_right_state(DAM_LEFT, 1.5, params)
        zL, zR, u_star, _ = solve_star(DAM_LEFT, right, params, TIGHT)
        assert zL == pytest.approx(1.5, rel=1e-9)
        assert abs(zR - 1.0) < 1e-9
        assert u_star == pytest.approx(right.v1, abs=1e-9)
        sol = build_solution(DAM_LEFT, right, params, TIGHT)
        for q in sol.states[1:5]:
            assert support.states_close(q, right, tol=1e-8)

    def test_transverse_round_trip(self, params):
        left = PrimitiveState(0.02, 0.1, 0.3, 2e-4, 5e-5, 3e-4)
        right, S = single_shock_right_state(left, 1.4, params)
        assert right.is_admissible()
        res = np.abs(jump_residuals(left, right, S, params))
        assert (res <= 1e-10 * support.residual_scale(left, right, S,
                                                      params)).all()
        assert lax_admissible_shock(left, right, S, 1, params)
        zL, zR, *_ = solve_star(left, right, params, TIGHT)
        assert zL == pytest.approx(1.4, rel=1e-9)
        assert abs(zR - 1.0) < 1e-9

    def test_zero_transverse_stays_zero(self, rng, params):
        for _ in range(30):
            q = sample_state(rng, corr_max=0.0)
            q = PrimitiveState(q.h, q.v1, 0.0, q.P11, 0.0, q.P22)
            side = SideData.from_primitive(q)
            z = rng.uniform(1.05, 1.9)
            u_star = g_velocity(z, side, params, -1.0)
            S = shock_speed(side, z, u_star, params, 1)
            v_s, R12_s, R22_s = transverse_star_state(side, z, u_star,
                                                      S, params)
            assert v_s == 0.0
            assert R12_s == 0.0
            assert R22_s > 0.0

    def test_speed_forms_agree(self, rng, params):
        for _ in range(200):
            side = SideData.from_primitive(sample_state(rng))
            z = rng.uniform(1.0 + 1e-6, 2.0 - 1e-3)
            for family, sgn in ((1, -1.0), (6, 1.0)):
                u_star = g_velocity(z, side, params, sgn)
                S = shock_speed(side, z, u_star, params, family)
                mass_form = (z * u_star - side.u) / (z - 1.0)
                assert S == pytest.approx(
                    mass_form, rel=1e-11, abs=1e-11)

    def test_speed_tends_to_characteristic(self, params):
        side = SideData.from_primitive(DAM_LEFT)
        lam1 = DAM_LEFT.v1 - DAM_LEFT.a(params.g)
        u_star = g_velocity(1.0 + 1e-10, side, params, -1.0)
        S = shock_speed(side, 1.0 + 1e-10, u_star, params, 1)
        assert S == pytest.approx(lam1, rel=1e-8)

    def test_built_shocks_lax_admissible(self, rng, params):
        for z in np.linspace(1.05, 1.9, 12):
            left = sample_state(rng, h_min=0.05, h_max=1.0, v_max=0.5,
                                p_min=1e-3, p_max=0.3, corr_max=0.5)
            right, S = single_shock_right_state(left, float(z), params)
            assert right.is_admissible()
            assert lax_admissible_shock(left, right, S, 1, params)
            assert right.v1 < left.v1
            assert total_pressure(right, params) > total_pressure(left,
                                                                  params)


class TestSpecialStructures:
    def test_pure_contact(self, params):
        left = PrimitiveState(0.02, 0.1, 0.0, 1e-4, 0.0, 1e-4)
        right = PrimitiveState(0.01, 0.1, 0.0, 0.14735, 0.0, 2e-4)
        sol = build_solution(left, right, params, TIGHT)
        assert sol.left_wave is WaveFamily.NONE
        assert sol.right_wave is WaveFamily.NONE
        assert sol.u_star == pytest.approx(0.1, abs=1e-12)
        assert sol.pi_star == pytest.approx(total_pressure(left, params),
                                            rel=1e-12)
        assert support.states_close(sample(sol, 0.0), left, tol=1e-11)
        assert support.states_close(sample(sol, 0.3), right, tol=1e-11)
        support.assert_jump_conditions(sol, params, tol=1e-10)

    def test_pure_shear(self, params):
        left = PrimitiveState(0.01, 0.0, 0.2, 1e-4, 0.0, 1e-4)
        right = PrimitiveState(0.01, 0.0, -0.2, 1e-4, 0.0, 1e-4)
        sol = build_solution(left, right, params, TIGHT)
        assert sol.left_wave is WaveFamily.NONE
        assert sol.right_wave is WaveFamily.NONE
        assert sol.u_star == pytest.approx(0.0, abs=1e-13)
        assert sol.shear_speed_L == pytest.approx(-0.01, abs=1e-12)
        assert sol.shear_speed_R == pytest.approx(0.01, abs=1e-12)
        mid_L, mid_R = sol.states[2], sol.states[3]
        assert mid_L.v2 == pytest.approx(0.0, abs=1e-13)
        assert mid_L.P12 == pytest.approx(2e-3, rel=1e-10)
        assert mid_L.P22 == pytest.approx(0.0401, rel=1e-10)
        assert support.states_close(mid_L, mid_R, tol=1e-12)
        support.assert_jump_conditions(sol, params, tol=1e-10)

    def test_pure_shear_reflection_symmetry(self, params):
        left = PrimitiveState(0.01, 0.0, 0.2, 1e-4, 0.0, 1e-4)
        right = PrimitiveState(0.01, 0.0, -0.2, 1e-4, 0.0, 1e-4)
        sol = build_solution(left, right, params, TIGHT)
        for xi in (0.003, 0.0085, 0.02, 0.2):
            a = sample(sol, xi)
            b = sample(sol, -xi)
            flipped = PrimitiveState(a.h, -a.v1, -a.v2, a.P11, a.P12, a.P22)
            assert support.states_close(b, flipped, tol=1e-11)

    def test_five_wave_structure(self, params):
        left = PrimitiveState(0.01, 0.1, 0.2, 4e-2, 1e-8, 4e-2)
        right = PrimitiveState(0.02, 0.1, -0.2, 4e-2, 1e-8, 4e-2)
        sol = build_solution(left, right, params, TIGHT)
        assert sol.left_wave is WaveFamily.SHOCK_1
        assert sol.right_wave is WaveFamily.RAREFACTION_6
        support.assert_jump_conditions(sol, params, tol=1e-10)
        errs = support.fan_invariant_errors(sol, 6, params, n=50)
        assert (errs <= 1e-8).all()
        assert sol.states[2].v2 != pytest.approx(sol.states[1].v2, abs=1e-3)

    def test_random_solutions_satisfy_jumps(self, rng, params):
        built = 0
        while built < 30:
            left, right = random_pair(rng, corr_max=0.6)
            try:
                sol = build_solution(left, right, params, TIGHT)
            except NoConvergence:
                continue
            if sol.vacuum:
                continue
            built += 1
            support.assert_jump_conditions(sol, params, tol=1e-9)
            for q in sol.states[1:5]:
                assert q.is_admissible()
                assert q.v1 == pytest.approx(sol.u_star,
                                             abs=1e-10 * max(1.0, abs(
                                                 sol.u_star)))

    def test_degenerate_band_means_no_wave(self, params):
        sol = build_solution(DAM_LEFT, DAM_LEFT, params, TIGHT)
        assert sol.left_wave is WaveFamily.NONE
        assert sol.right_wave is WaveFamily.NONE
        assert abs(sol.zL - 1.0) <= DEGENERATE_Z
        for xi in (-1.0, 0.0, 1.0):
            assert support.states_close(sample(sol, xi), DAM_LEFT, tol=1e-12)


class TestVacuum:
    def test_right_dry_input(self, params):
        left = PrimitiveState(0.02, 0.15, 0.3, 2e-4, 5e-5, 3e-4)
        sol = build_solution(left, VACUUM, params)
        assert sol.vacuum
        assert sol.right_speeds is None
        head, front = sol.left_speeds
        side = SideData.from_primitive(left)
        assert head == pytest.approx(left.v1 - left.a(params.g), rel=1e-13)
        assert front == pytest.approx(
            left.v1 + afun(left.h, side.c, params), rel=1e-13)
        assert sample(sol, front + 0.01).h == 0.0
        # depth shrinks quadratically with distance from the front, so a
        # 1e-5 offset leaves a tiny but resolvable wet layer
        near = sample(sol, front - 1e-5)
        assert 0.0 < near.h < 1e-9
        beta = left.P12 / (params.g * left.h + 2.0 * left.P11)
        amax = afun(left.h, side.c, params)
        assert near.v1 == pytest.approx(left.v1 + amax, abs=1e-4)
        assert near.v2 == pytest.approx(left.v2 + 2.0 * beta * amax,
                                        abs=1e-4)

    def test_left_dry_input(self, params):
        right = PrimitiveState(0.02, -0.15, 0.3, 2e-4, -5e-5, 3e-4)
        sol = build_solution(VACUUM, right, params)
        assert sol.vacuum
        assert sol.left_speeds is None
        front, head = sol.right_speeds
        assert sample(sol, front - 0.01).h == 0.0
        near = sample(sol, front + 1e-5)
        assert 0.0 < near.h < 1e-9
        assert near.v1 == pytest.approx(
            right.v1 - afun(right.h, SideData.from_primitive(right).c,
                            params), abs=1e-4)
        assert sample(sol, head + 0.01) == right

    def test_both_dry(self, params):
        sol = build_solution(VACUUM, VACUUM, params)
        assert sol.vacuum
        for xi in (-1.0, 0.0, 1.0):
            assert sample(sol, xi) == VACUUM

    def test_strong_expansion_opens_dry_region(self, params):
        left = PrimitiveState(0.01, -3.0, 0.0, 1e-4, 0.0, 1e-4)
        right = PrimitiveState(0.01, 3.0, 0.0, 1e-4, 0.0, 1e-4)
        sol = build_solution(left, right, params)
        assert sol.vacuum
        assert sol.left_speeds[1] < sol.right_speeds[0]
        assert sample(sol, 0.0).h == 0.0
        xs = np.linspace(-4.0, 4.0, 201)
        hs = np.array([sample(sol, x).h for x in xs])
        assert hs[0] == left.h and hs[-1] == right.h
        # depth falls to zero and recovers with no jumps anywhere
        steps = np.abs(np.diff(hs))
        assert steps.max() < 0.02 * left.h + (xs[1] - xs[0])

    def test_marginal_case_touches_dry_point(self, params):
        base = PrimitiveState(0.01, 0.0, 0.0, 1e-4, 0.0, 1e-4)
        side = SideData.from_primitive(base)
        amax = afun(base.h, side.c, params)
        left = PrimitiveState(base.h, 0.0, 0.0, base.P11, 0.0, base.P22)
        right = PrimitiveState(base.h, 2.0 * amax, 0.0, base.P11, 0.0,
                               base.P22)
        with pytest.raises(VacuumFormation):
            solve_star(left, right, params)
        sol = build_solution(left, right, params)
        assert sol.vacuum
        assert sol.left_speeds[1] == pytest.approx(sol.right_speeds[0],
                                                   abs=1e-12)
        assert sample(sol, amax - 1e-4).h > 0.0
        assert sample(sol, amax + 1e-4).h > 0.0


class TestMirrorProperty:
    def test_sampled_profiles_mirror(self, rng, params):
        done = 0
        while done < 25:
            left, right = random_pair(rng, corr_max=0.5)
            mleft = PrimitiveState(right.h, -right.v1, right.v2,
                                   right.P11, -right.P12, right.P22)
            mright = PrimitiveState(left.h, -left.v1, left.v2,
                                    left.P11, -left.P12, left.P22)
            try:
                sol = build_solution(left, right, params, TIGHT)
                msol = build_solution(mleft, mright, params, TIGHT)
            except NoConvergence:
                continue
            if sol.vacuum:
                continue
            done += 1
            speeds = [sol.left_speeds[0], sol.left_speeds[1],
                      sol.shear_speed_L, sol.contact_speed,
                      sol.shear_speed_R, sol.right_speeds[0],
                      sol.right_speeds[1]]
            span = max(abs(s) for s in speeds) + 1.0
            for xi in np.linspace(-span, span, 41):
                if min(abs(xi - s) for s in speeds) < 1e-3:
                    continue
                a = sample(sol, float(xi))
                b = sample(msol, float(-xi))
                mirrored = PrimitiveState(a.h, -a.v1, a.v2, a.P11,
                                          -a.P12, a.P22)
                assert support.states_close(b, mirrored, tol=1e-9)

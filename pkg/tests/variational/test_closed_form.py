"""
Copyright (c) dickemqs contributors.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

import math

import numpy as np
import pytest

from dickemqs.common.errors import ValidationError
from dickemqs.core.params import make_params
from dickemqs.variational import (
    Tolerances,
    branch_energy,
    consistency_check,
    critical_coupling,
    effective_frame,
    energy_functional,
    geometric_phase,
    gp_derivative,
    jz_expectation,
    stationary_field,
)


@pytest.fixture(scope="class")
def load_params(request):
    request.cls.params = make_params(1.0, 1.0, 2.0, 1)


@pytest.mark.usefixtures("load_params")
class TestSuperradiantSpotValues:
    def test_full_branches(self):
        minus = branch_energy(self.params, "full", "minus")
        plus = branch_energy(self.params, "full", "plus")
        assert minus.phase == "superradiant"
        assert abs(minus.energy_per_atom - (-1.0625)) < 1e-12
        assert abs(plus.energy_per_atom - 2.9375) < 1e-12
        assert abs(minus.jz - (-0.125)) < 1e-12
        assert abs(minus.field.intensity - 0.9375) < 1e-12
        assert abs(minus.gamma - 15 * math.pi / 8) < 1e-12
        assert minus.degeneracy == "sign-pair"

    def test_plus_branch_has_no_jz(self):
        plus = branch_energy(self.params, "full", "plus")
        assert plus.jz is None
        assert any("jz" in note for note in plus.notes)

    def test_rwa_is_normal_at_its_critical_point(self):
        minus = branch_energy(self.params, "rwa", "minus")
        assert minus.phase == "normal"
        assert minus.energy_per_atom == -0.5
        assert minus.degeneracy == "point"
        assert minus.critical_coupling == 2.0

    def test_rwa_superradiant_is_circle(self):
        params = make_params(1.0, 1.0, 3.0, 2)
        minus = branch_energy(params, "rwa", "minus")
        assert minus.degeneracy == "circle"
        assert minus.field.v == 0.0 and minus.field.u > 0


class TestNormalPhase:
    def test_plateau(self):
        for g in np.linspace(0.0, 1.0, 11):
            for n_atoms in (1, 3, 10):
                params = make_params(1.0, 1.0, g, n_atoms)
                minus = branch_energy(params, "full", "minus")
                plus = branch_energy(params, "full", "plus")
                assert minus.phase == "normal"
                assert minus.energy_per_atom == -0.5
                assert plus.energy_per_atom == 0.5
                assert minus.jz / n_atoms == -0.5
                assert minus.field.intensity == 0.0
                assert minus.gamma == 0.0

    def test_critical_point_is_normal(self):
        params = make_params(2.0, 0.5, 1.0, 4)
        assert branch_energy(params, "full", "minus").phase == "normal"


class TestCriticalCoupling:
    def test_rwa_is_twice_full(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            params = make_params(
                rng.uniform(0.1, 5.0), rng.uniform(0.1, 5.0), 0.0, 1
            )
            assert critical_coupling(params, "rwa") == 2 * critical_coupling(
                params, "full"
            )

    def test_rwa_at_double_coupling_matches_full(self):
        rng = np.random.default_rng(4)
        for _ in range(10):
            omega, big_omega = rng.uniform(0.2, 3.0, size=2)
            g = rng.uniform(0.0, 3.0)
            n_atoms = int(rng.integers(1, 20))
            full = branch_energy(
                make_params(omega, big_omega, g, n_atoms), "full", "minus"
            )
            rwa = branch_energy(
                make_params(omega, big_omega, 2 * g, n_atoms), "rwa", "minus"
            )
            assert rwa.energy == full.energy
            assert rwa.jz == full.jz

    def test_invalid_variant(self):
        with pytest.raises(ValidationError):
            critical_coupling(make_params(1.0, 1.0, 0.0, 1), "jaynes")


class TestSecondOrderTransition:
    def test_derivative_continuous_at_critical_point(self):
        h = 1e-4

        def e_per_atom(g):
            params = make_params(1.0, 1.0, g, 1)
            return branch_energy(params, "full", "minus").energy_per_atom

        left = (e_per_atom(1.0) - e_per_atom(1.0 - h)) / h
        right = (e_per_atom(1.0 + h) - e_per_atom(1.0)) / h
        assert abs(left) <= 1e-3
        assert abs(right) <= 1e-3
        assert abs(e_per_atom(1.0 + 1e-13) - e_per_atom(1.0)) < 1e-12


class TestEnergyFunctional:
    def test_stationary_field_minimizes(self):
        rng = np.random.default_rng(5)
        for _ in range(10):
            params = make_params(
                rng.uniform(0.5, 1.5),
                rng.uniform(0.5, 1.5),
                rng.uniform(0.0, 3.0),
                int(rng.integers(1, 10)),
            )
            for variant in ("full", "rwa"):
                field = stationary_field(params, variant).field
                closed = branch_energy(params, variant, "minus").energy
                at_field = energy_functional(
                    params, variant, field.u, field.v, "minus"
                )
                np.testing.assert_allclose(at_field, closed, atol=1e-10)
                us = field.u + np.linspace(-0.5, 0.5, 21)
                landscape = energy_functional(
                    params, variant, us, np.zeros_like(us), "minus"
                )
                assert np.all(landscape >= closed - 1e-10)

    def test_plus_branch_value_at_stationary_field(self):
        params = make_params(1.0, 2.0, 3.0, 5)
        field = stationary_field(params, "full").field
        plus = branch_energy(params, "full", "plus").energy
        np.testing.assert_allclose(
            energy_functional(params, "full", field.u, field.v, "plus"),
            plus,
            rtol=1e-12,
        )

    def test_scalar_and_array(self):
        params = make_params(1.0, 1.0, 1.5, 2)
        value = energy_functional(params, "full", 0.3, 0.0, "minus")
        assert isinstance(value, float)
        grid = energy_functional(
            params, "full", np.zeros((3, 4)), np.zeros((3, 4)), "minus"
        )
        assert grid.shape == (3, 4)

    def test_scale_covariance(self):
        params = make_params(0.8, 1.3, 2.1, 6)
        scaled = params.scaled(2.5)
        for variant in ("full", "rwa"):
            for branch in ("minus", "plus"):
                np.testing.assert_allclose(
                    branch_energy(scaled, variant, branch).energy,
                    2.5 * branch_energy(params, variant, branch).energy,
                    rtol=1e-12,
                )
            np.testing.assert_allclose(
                jz_expectation(scaled, variant),
                jz_expectation(params, variant),
                rtol=1e-12,
            )
            minus = branch_energy(params, variant, "minus")
            minus_scaled = branch_energy(scaled, variant, "minus")
            assert minus_scaled.phase == minus.phase == "superradiant"
            np.testing.assert_allclose(
                minus_scaled.critical_coupling,
                2.5 * minus.critical_coupling,
                rtol=1e-12,
            )
            # |alpha|^2 and gamma depend on g / g_c and Omega / g only
            np.testing.assert_allclose(
                minus_scaled.field.intensity,
                minus.field.intensity,
                rtol=1e-12,
            )
            np.testing.assert_allclose(
                geometric_phase(scaled, variant),
                geometric_phase(params, variant),
                rtol=1e-12,
            )
            np.testing.assert_allclose(
                gp_derivative(scaled, variant),
                gp_derivative(params, variant) / 2.5,
                rtol=1e-12,
            )

    def test_scale_covariance_keeps_normal_phase(self):
        params = make_params(1.1, 0.9, 0.6, 3)
        scaled = params.scaled(4.0)
        for variant in ("full", "rwa"):
            minus = branch_energy(scaled, variant, "minus")
            assert minus.phase == "normal"
            assert minus.field.intensity == 0.0
            assert geometric_phase(scaled, variant) == 0.0


class TestEffectiveFrame:
    def test_stationary_frame_reproduces_jz(self):
        params = make_params(1.0, 1.0, 2.0, 4)
        field = stationary_field(params, "full").field
        frame = effective_frame(params, "full", field.u, field.v)
        np.testing.assert_allclose(
            -0.5 * params.n_atoms * math.cos(frame.theta),
            jz_expectation(params, "full"),
            atol=1e-12,
        )

    def test_angles_in_range(self):
        params = make_params(1.0, 1.0, 2.0, 3)
        for u, v in ((-1.0, 0.5), (0.0, -2.0), (0.3, 0.0), (0.0, 0.0)):
            frame = effective_frame(params, "rwa", u, v)
            assert 0.0 <= frame.theta <= math.pi
            assert 0.0 <= frame.phi < 2 * math.pi


class TestInversion:
    def test_continuous_at_critical_point(self):
        for variant in ("full", "rwa"):
            for n_atoms in (1, 4, 13):
                base = make_params(0.7, 1.6, 0.0, n_atoms)
                g_c = critical_coupling(base, variant)
                at = jz_expectation(base.with_coupling(g_c), variant)
                above = jz_expectation(
                    base.with_coupling(g_c * (1 + 1e-13)), variant
                )
                assert at == -0.5 * n_atoms
                assert above > at
                assert abs(above - at) / n_atoms <= 1e-12

    def test_non_decreasing_in_coupling(self):
        for variant in ("full", "rwa"):
            base = make_params(0.7, 1.6, 0.0, 5)
            g_c = critical_coupling(base, variant)
            grid = np.linspace(0.0, 4.0 * g_c, 401)
            jz = np.array(
                [jz_expectation(base.with_coupling(g), variant) for g in grid]
            )
            assert np.all(np.diff(jz) >= 0.0)
            assert np.all(np.diff(jz[grid > g_c]) > 0.0)
            assert np.all(jz >= -2.5) and np.all(jz < 0.0)


class TestConsistencyCheck:
    def test_closed_forms_agree_with_functional(self):
        rng = np.random.default_rng(9)
        tolerances = Tolerances()
        for _ in range(20):
            params = make_params(
                rng.uniform(0.3, 2.0),
                rng.uniform(0.3, 2.0),
                rng.uniform(0.0, 4.0),
                int(rng.integers(1, 40)),
            )
            for variant in ("full", "rwa"):
                check = consistency_check(params, variant, tolerances)
                assert check.ok, (params, variant, check)
                assert check.minus_gap_per_atom <= tolerances.energy_atol
                assert check.plus_gap_per_atom <= tolerances.energy_atol
                assert check.jz_gap <= tolerances.rtol

    def test_tolerances_are_applied(self):
        params = make_params(1.0, 1.0, 2.0, 3)
        assert consistency_check(params, "full").ok
        no_energy_slack = Tolerances(energy_atol=-1.0)
        assert not consistency_check(params, "full", no_energy_slack).ok
        no_relative_slack = Tolerances(rtol=-1.0)
        assert not consistency_check(params, "rwa", no_relative_slack).ok

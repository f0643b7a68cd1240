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
    geometric_phase,
    gp_derivative,
    gp_scaling_check,
)


class TestGeometricPhase:
    def test_zero_in_normal_phase(self):
        for g in (0.0, 0.3, 1.0):
            params = make_params(1.0, 1.0, g, 7)
            assert geometric_phase(params, "full") == 0.0
            assert gp_derivative(params, "full") == 0.0

    def test_closed_form(self):
        rng = np.random.default_rng(11)
        for _ in range(10):
            omega, big_omega = rng.uniform(0.3, 2.0, size=2)
            g_c = math.sqrt(omega * big_omega)
            g = g_c * rng.uniform(1.01, 3.0)
            n_atoms = int(rng.integers(1, 30))
            params = make_params(omega, big_omega, g, n_atoms)
            expected = (
                math.pi
                * n_atoms
                * big_omega ** 2
                / (2 * g ** 2)
                * (g ** 4 / g_c ** 4 - 1)
            )
            np.testing.assert_allclose(
                geometric_phase(params, "full"), expected, rtol=1e-12
            )

    def test_rwa_matches_full_at_same_ratio(self):
        full = make_params(1.0, 1.0, 1.5, 3)
        rwa = make_params(1.0, 1.0, 3.0, 3)
        # equal g / g_c gives equal gamma: the 1 / g^2 prefactor cancels k
        np.testing.assert_allclose(
            geometric_phase(rwa, "rwa"),
            geometric_phase(full, "full"),
            rtol=1e-12,
        )

    def test_derivative_matches_finite_difference(self):
        params = make_params(1.0, 1.0, 1.7, 2)
        h = 1e-6
        numeric = (
            geometric_phase(params.with_coupling(1.7 + h), "full")
            - geometric_phase(params.with_coupling(1.7 - h), "full")
        ) / (2 * h)
        np.testing.assert_allclose(
            gp_derivative(params, "full"), numeric, rtol=1e-6
        )


class TestKink:
    def test_jump_at_critical_point(self):
        params = make_params(1.0, 1.0, 1.0, 5)
        left = gp_derivative(params, "full", side="left")
        right = gp_derivative(params, "full", side="right")
        assert left == 0.0
        np.testing.assert_allclose(right / params.n_atoms, 2 * math.pi)
        # default follows the normal-phase classification
        assert gp_derivative(params, "full") == 0.0

    def test_general_slope(self):
        params = make_params(2.0, 0.5, 1.0, 1)
        right = gp_derivative(params, "full", side="right")
        np.testing.assert_allclose(right, 2 * math.pi * 0.5 ** 2 / 1.0)

    def test_right_limit_approached(self):
        params = make_params(1.0, 1.0, 1.0 + 1e-9, 3)
        np.testing.assert_allclose(
            gp_derivative(params, "full") / 3, 2 * math.pi, rtol=1e-6
        )

    def test_scaling_gap_is_linear(self):
        params = make_params(1.0, 1.0, 1.0, 4)
        gaps = [
            gp_scaling_check(params, delta).gap
            for delta in (1e-2, 1e-3, 1e-4)
        ]
        assert abs(gaps[0]) > abs(gaps[1]) > abs(gaps[2])
        np.testing.assert_allclose(gaps[0] / gaps[1], 10.0, rtol=0.05)
        np.testing.assert_allclose(gaps[1] / gaps[2], 10.0, rtol=0.05)

    def test_invalid_arguments(self):
        params = make_params(1.0, 1.0, 1.0, 1)
        with pytest.raises(ValidationError):
            gp_scaling_check(params, 0.0)
        with pytest.raises(ValidationError):
            gp_derivative(params, "full", side="up")

"""
Copyright (c) dickemqs contributors.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

import numpy as np
import pytest

from dickemqs.common.errors import MinimizationError
from dickemqs.core.params import make_params
from dickemqs.variational import (
    Tolerances,
    branch_energy,
    critical_coupling,
    cross_check,
    numeric_minimize,
)
from dickemqs.variational.minimizer import search_radius


def random_draws(seed, count):
    """Parameter draws on both sides of g_c, away from the flat region
    right at the transition.
    """
    rng = np.random.default_rng(seed)
    draws = []
    for i in range(count):
        variant = ("full", "rwa")[i % 2]
        omega, big_omega = rng.uniform(0.5, 2.0, size=2)
        n_atoms = int(rng.integers(1, 12))
        base = make_params(omega, big_omega, 0.0, n_atoms)
        g_c = critical_coupling(base, variant)
        if i % 4 < 2:
            ratio = rng.uniform(0.1, 0.9)
        else:
            ratio = rng.uniform(1.2, 2.5)
        draws.append(
            (make_params(omega, big_omega, ratio * g_c, n_atoms), variant)
        )
    return draws


@pytest.fixture(scope="class")
def load_draws(request):
    request.cls.draws = random_draws(2024, 20)


@pytest.mark.usefixtures("load_draws")
class TestNumericMinimize:
    def test_agrees_with_closed_form(self):
        tolerances = Tolerances()
        for params, variant in self.draws:
            check = cross_check(params, variant, tolerances)
            assert check.ok, (params, variant, check)
            assert check.consistency.ok
            assert (
                check.energy_gap_per_atom
                <= tolerances.minimizer_energy_atol
            )
            assert (
                check.intensity_gap <= tolerances.minimizer_intensity_rtol
            )

    def test_never_below_closed_form(self):
        for params, variant in self.draws[:6]:
            minimum = numeric_minimize(params, variant)
            closed = branch_energy(params, variant, "minus").energy
            assert minimum.energy >= closed - 1e-9

    def test_superradiant_full_keeps_v_zero(self):
        params = make_params(1.0, 1.0, 2.0, 4)
        minimum = numeric_minimize(params, "full")
        assert abs(minimum.field.v) < 1e-6
        np.testing.assert_allclose(
            minimum.field.intensity, 3.75, rtol=1e-6
        )


class TestSearchRadius:
    def test_radius_grows_with_coupling(self):
        normal = make_params(1.0, 1.0, 0.5, 4)
        strong = make_params(1.0, 1.0, 3.0, 4)
        np.testing.assert_allclose(search_radius(normal, "full"), 4.0)
        np.testing.assert_allclose(search_radius(strong, "full"), 12.0)

    def test_radius_covers_stationary_field(self):
        params = make_params(0.7, 1.9, 4.0, 9)
        for variant in ("full", "rwa"):
            field = branch_energy(params, variant, "minus").field
            assert field.u < search_radius(params, variant)


class TestFailure:
    def test_no_rounds_raises_with_best(self):
        params = make_params(1.0, 1.0, 2.0, 2)
        with pytest.raises(MinimizationError) as excinfo:
            numeric_minimize(params, "full", max_rounds=0)
        best = excinfo.value.best
        assert best is not None
        assert np.isfinite(best.energy)
        assert excinfo.value.exit_code == 3
        assert excinfo.value.context["variant"] == "full"

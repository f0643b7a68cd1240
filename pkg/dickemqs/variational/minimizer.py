"""
Copyright (c) dickemqs contributors.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

"""
Derivative-free minimization of the ground-branch energy functional over
alpha = u + i v. It does not use the closed-form stationary point, so it can
be used to check it: a coarse grid picks the basin, then alternating
golden-section line searches on u and v refine it.
"""

import logging
import math
from collections import namedtuple

import numpy as np
from scipy.optimize import minimize_scalar

from dickemqs.common.errors import MinimizationError
from dickemqs.core.params import check_variant
from dickemqs.variational.closed_form import (
    FieldPoint,
    Tolerances,
    branch_energy,
    consistency_check,
    critical_coupling,
    energy_functional,
    stationary_field,
)

VariationalMinimum = namedtuple("VariationalMinimum", ["field", "energy"])
CrossCheck = namedtuple(
    "CrossCheck",
    ["minimum", "energy_gap_per_atom", "intensity_gap", "consistency", "ok"],
)

# Largest number of downhill moves when looking for a line-search bracket.
_MAX_BRACKET_STEPS = 64


def search_radius(params, variant):
    """U = 2 sqrt(N) max(1, g / g_c) Omega / g_c; the grid spans
    [-U, U] x [-U, U].
    """
    g_c = critical_coupling(params, variant)
    return (
        2.0
        * math.sqrt(params.n_atoms)
        * max(1.0, params.g / g_c)
        * params.Omega
        / g_c
    )


def _local_bracket(f, x, step):
    """Walk downhill from x until f(x - step) > f(x) < f(x + step).
    Returns the bracketing triple, or None when f is flat around x.
    """
    fx = f(x)
    for _ in range(_MAX_BRACKET_STEPS):
        f_left, f_right = f(x - step), f(x + step)
        if f_left > fx and f_right > fx:
            return (x - step, x, x + step)
        if f_left < fx or f_right < fx:
            if f_left < f_right:
                x, fx = x - step, f_left
            else:
                x, fx = x + step, f_right
        else:
            step *= 0.5
            if step == 0.0:
                return None
    return None


def _line_search(f, x, step, xtol):
    bracket = _local_bracket(f, x, step)
    if bracket is None:
        return x
    result = minimize_scalar(f, bracket=bracket, method="golden", tol=xtol)
    # golden never leaves the bracket's basin; keep the better end point
    if result.fun <= f(bracket[1]):
        return float(result.x)
    return bracket[1]


def numeric_minimize(
    params, variant, grid_points=201, max_rounds=50, energy_tol=1e-10
):
    """Minimize E_-(u, v) by grid search followed by coordinate-wise
    golden-section refinement.

    Args:
        params (ModelParams): Physical parameters.
        variant (str): ``"full"`` or ``"rwa"``.
        grid_points (int): Points per axis of the coarse grid. Odd values
            put the origin on the grid.
        max_rounds (int): Refinement rounds (one u and one v line search
            each) before giving up.
        energy_tol (float): Stop when a round lowers the energy by less than
            this amount.

    Returns:
        VariationalMinimum: ``(field, energy)``.
    """
    variant = check_variant(variant)

    def energy(u, v):
        return energy_functional(params, variant, u, v, "minus")

    radius = search_radius(params, variant)
    axis = np.linspace(-radius, radius, grid_points)
    uu, vv = np.meshgrid(axis, axis, indexing="ij")
    landscape = energy(uu, vv)
    i, j = np.unravel_index(np.argmin(landscape), landscape.shape)
    u, v = float(axis[i]), float(axis[j])
    best = landscape[i, j]
    step = float(axis[1] - axis[0])
    logging.debug(
        f"Grid minimum E={best:.12g} at u={u:.6g}, v={v:.6g} "
        f"(radius {radius:.6g}, {grid_points}^2 points)"
    )

    trace = [(u, v, best)]
    for round_idx in range(1, max_rounds + 1):
        u = _line_search(lambda x: energy(x, v), u, step, 1e-10)
        v = _line_search(lambda y: energy(u, y), v, step, 1e-10)
        current = energy(u, v)
        trace.append((u, v, current))
        improvement = best - current
        best = min(best, current)
        if abs(improvement) < energy_tol:
            logging.debug(
                f"Refinement converged after {round_idx} rounds: "
                f"E={current:.15g}"
            )
            return VariationalMinimum(field=FieldPoint(u, v), energy=current)
        step = max(step * 0.5, 1e-8 * max(1.0, radius))

    u, v, value = min(trace, key=lambda item: item[2])
    raise MinimizationError(
        f"Energy refinement did not converge in {max_rounds} rounds",
        best=VariationalMinimum(field=FieldPoint(u, v), energy=value),
        trace=trace,
        g=params.g,
        variant=variant,
    )


def cross_check(params, variant, tolerances=None, **minimizer_kwargs):
    """Compare :func:`numeric_minimize` with the closed-form ground branch.

    ``intensity_gap`` is relative in the superradiant phase and absolute in
    the normal phase (where the exact intensity is zero). ``consistency``
    re-derives the closed forms from the functional and must pass too.
    """
    tolerances = tolerances or Tolerances()
    minimum = numeric_minimize(params, variant, **minimizer_kwargs)
    closed = branch_energy(params, variant, "minus")
    target = stationary_field(params, variant).field.intensity

    energy_gap = abs(minimum.energy - closed.energy) / params.n_atoms
    if target > 0:
        intensity_gap = abs(minimum.field.intensity - target) / target
    else:
        intensity_gap = minimum.field.intensity
    consistency = consistency_check(params, variant, tolerances)
    ok = (
        energy_gap <= tolerances.minimizer_energy_atol
        and intensity_gap <= tolerances.minimizer_intensity_rtol
        and consistency.ok
    )
    if not ok:
        logging.warning(
            f"Minimizer disagrees with closed form ({variant}, g={params.g}):"
            f" dE/N={energy_gap:.3g}, d|alpha|^2={intensity_gap:.3g}"
        )
    return CrossCheck(
        minimum=minimum,
        energy_gap_per_atom=energy_gap,
        intensity_gap=intensity_gap,
        consistency=consistency,
        ok=ok,
    )

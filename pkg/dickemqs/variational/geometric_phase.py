"""
Copyright (c) dickemqs contributors.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

"""
Geometric phase generated by the photon-number rotation
U(phi) = exp(i a^dag a phi) acting on the ground MQS: gamma = 2 pi |alpha|^2.
"""

import math
from collections import namedtuple

from dickemqs.common.errors import ValidationError
from dickemqs.variational.closed_form import (
    INTENSITY_DIVISOR,
    critical_coupling,
    phase_label,
    stationary_field,
)

ScalingCheck = namedtuple("ScalingCheck", ["lhs", "rhs", "gap"])

SIDES = (None, "left", "right")


def geometric_phase(params, variant):
    """gamma = 2 pi |alpha|^2 at the ground-branch stationary field.

    For the full model this is (pi N Omega^2 / 2 g^2)(g^4 / g_c^4 - 1) above
    g_c; the rwa value uses the rwa intensity, which equals the full one at
    the same g / g_c.
    """
    field = stationary_field(params, variant).field
    return 2.0 * math.pi * field.intensity


def critical_slope(params, variant):
    """Right limit of d(gamma)/dg at g_c."""
    g_c = critical_coupling(params, variant)
    return (
        8.0
        * math.pi
        * params.n_atoms
        * params.Omega ** 2
        / (INTENSITY_DIVISOR[variant] * g_c ** 3)
    )


def gp_derivative(params, variant, side=None):
    """d(gamma)/dg: zero in the normal phase,
    (4 pi / k) N Omega^2 g (1 / g_c^4 + 1 / g^4) above g_c with k = 4 (full)
    or k = 1 (rwa).

    At g == g_c the derivative jumps; ``side="left"`` or ``"right"`` picks a
    one-sided limit, the default follows the normal-phase classification.
    """
    if side not in SIDES:
        raise ValidationError(
            f"side must be one of {SIDES}, got {side!r}", field="side"
        )
    g_c = critical_coupling(params, variant)
    if params.g == g_c and side == "right":
        return critical_slope(params, variant)
    if phase_label(params, variant) == "normal":
        return 0.0
    g = params.g
    return (
        4.0
        * math.pi
        / INTENSITY_DIVISOR[variant]
        * params.n_atoms
        * params.Omega ** 2
        * g
        * (1.0 / g_c ** 4 + 1.0 / g ** 4)
    )


def gp_scaling_check(params, delta, variant="full"):
    """Compare gamma(g_c + delta) / N against the linear law
    (slope / N) * delta. ``gap`` is the relative deviation, which shrinks
    linearly with delta.
    """
    if not (delta > 0):
        raise ValidationError(f"delta must be > 0, got {delta}", field="delta")
    g_c = critical_coupling(params, variant)
    shifted = params.with_coupling(g_c + delta)
    lhs = geometric_phase(shifted, variant) / params.n_atoms
    rhs = critical_slope(params, variant) / params.n_atoms * delta
    return ScalingCheck(lhs=lhs, rhs=rhs, gap=(lhs - rhs) / rhs)

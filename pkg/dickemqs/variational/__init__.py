# Copyright (c) dickemqs contributors.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

__all__ = [
    "BranchResult",
    "EffectiveSpinFrame",
    "FieldPoint",
    "Tolerances",
    "branch_energy",
    "consistency_check",
    "critical_coupling",
    "cross_check",
    "effective_frame",
    "energy_functional",
    "geometric_phase",
    "gp_derivative",
    "gp_scaling_check",
    "jz_expectation",
    "numeric_minimize",
    "stationary_field",
]

from .closed_form import (
    BranchResult,
    EffectiveSpinFrame,
    FieldPoint,
    Tolerances,
    branch_energy,
    consistency_check,
    critical_coupling,
    effective_frame,
    energy_functional,
    jz_expectation,
    stationary_field,
)
from .geometric_phase import geometric_phase, gp_derivative, gp_scaling_check
from .minimizer import cross_check, numeric_minimize

# Copyright (c) dickemqs contributors.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

__all__ = [
    "CutoffPolicy",
    "ExactResult",
    "ScanRow",
    "Spectrum",
    "convergence_scan",
    "exact_ground",
    "low_spectrum",
    "perturbative_levels",
]

from .diagonalization import (
    CutoffPolicy,
    ExactResult,
    ScanRow,
    Spectrum,
    convergence_scan,
    exact_ground,
    low_spectrum,
    perturbative_levels,
)

# Copyright (c) dickemqs contributors.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

__all__ = [
    "ModelParams",
    "make_params",
    "SpinAlgebra",
    "BosonAlgebra",
    "spin_matrices",
    "boson_matrices",
    "build_hamiltonian",
    "effective_spin_hamiltonian",
    "excitation_number_operator",
    "parity_operator",
    "rotation_operator",
    "build_scs",
    "build_coherent",
    "coherent_cutoff",
    "scs_uncertainty",
    "trial_energy",
    "trial_observables",
]

from .operators import (
    BosonAlgebra,
    SpinAlgebra,
    boson_matrices,
    build_hamiltonian,
    effective_spin_hamiltonian,
    excitation_number_operator,
    parity_operator,
    spin_matrices,
)
from .params import ModelParams, make_params
from .states import (
    build_coherent,
    build_scs,
    coherent_cutoff,
    rotation_operator,
    scs_uncertainty,
    trial_energy,
    trial_observables,
)

"""
Copyright (c) dickemqs contributors.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

import math
from collections import namedtuple

import numpy as np

from dickemqs.common.errors import CutoffTooSmallError, ValidationError
from dickemqs.core.operators import (
    boson_matrices,
    build_hamiltonian,
    check_cutoff,
    spin_matrices,
)
from dickemqs.core.params import check_pole

TrialObservables = namedtuple(
    "TrialObservables", ["energy", "jz", "photons", "norm"]
)

# Poisson tail beyond this many standard deviations is dropped.
TAIL_SIGMAS = 8


def bloch_vector(theta, phi):
    """n = (sin(theta) cos(phi), sin(theta) sin(phi), cos(theta))."""
    return np.array(
        [
            math.sin(theta) * math.cos(phi),
            math.sin(theta) * math.sin(phi),
            math.cos(theta),
        ]
    )


def rotation_axis(phi):
    """m = (sin(phi), -cos(phi), 0), perpendicular to z and n."""
    return np.array([math.sin(phi), -math.cos(phi), 0.0])


def _check_angles(theta, phi):
    if not (0.0 <= theta <= math.pi):
        raise ValidationError(
            f"theta must lie in [0, pi], got {theta}", field="theta"
        )
    if not (0.0 <= phi < 2 * math.pi):
        raise ValidationError(
            f"phi must lie in [0, 2 pi), got {phi}", field="phi"
        )


def rotation_operator(n_atoms, theta, phi):
    """R = exp(i theta m . J), evaluated through the spectral decomposition
    of the Hermitian generator m . J.
    """
    _check_angles(theta, phi)
    spin = spin_matrices(n_atoms)
    generator = spin.along(rotation_axis(phi))
    eigvals, eigvecs = np.linalg.eigh(generator)
    phases = np.exp(1j * theta * eigvals)
    return (eigvecs * phases) @ eigvecs.conj().T


def build_scs(n_atoms, theta, phi, pole):
    """Spin coherent state |+-n> = R |s, +-s>.

    ``pole="north"`` rotates |s, s> and gives the J . n eigenvalue +s,
    ``pole="south"`` rotates |s, -s> and gives -s.
    """
    pole = check_pole(pole)
    rotation = rotation_operator(n_atoms, theta, phi)
    index = 0 if pole == "north" else n_atoms
    state = rotation[:, index].copy()
    return state / np.linalg.norm(state)


def scs_uncertainty(n_atoms, theta, phi, pole):
    """Both sides of the minimum-uncertainty relation of a spin coherent
    state, (1/2)|<J_z'>| and <(dJ_x')^2>^(1/2) <(dJ_y')^2>^(1/2), measured
    with the rotated-frame components J_k' = R J_k R^dagger in |+-n>.
    """
    spin = spin_matrices(n_atoms)
    rotation = rotation_operator(n_atoms, theta, phi)
    state = build_scs(n_atoms, theta, phi, pole)

    def moments(op):
        rotated = rotation @ op @ rotation.conj().T
        mean = np.vdot(state, rotated @ state).real
        second = np.vdot(state, rotated @ (rotated @ state)).real
        return mean, max(second - mean * mean, 0.0)

    mean_z, _ = moments(spin.jz)
    _, var_x = moments(spin.jx)
    _, var_y = moments(spin.jy)
    return 0.5 * abs(mean_z), math.sqrt(var_x) * math.sqrt(var_y)


def coherent_cutoff(intensity):
    """Smallest Fock cutoff passing the truncation tail guard."""
    return max(
        1, math.ceil(intensity + TAIL_SIGMAS * math.sqrt(intensity + 1))
    )


def build_coherent(alpha, cutoff):
    """Boson coherent state |alpha> on |0>, ..., |cutoff>.

    Amplitudes exp(-|alpha|^2 / 2) alpha^n / sqrt(n!) are generated by the
    recursion c_n = c_(n-1) alpha / sqrt(n) and renormalized after
    truncation.
    """
    cutoff = check_cutoff(cutoff)
    alpha = complex(alpha)
    if alpha == 0:
        state = np.zeros(cutoff + 1, dtype=np.complex128)
        state[0] = 1.0
        return state

    intensity = abs(alpha) ** 2
    required = intensity + TAIL_SIGMAS * math.sqrt(intensity + 1)
    if required > cutoff:
        raise CutoffTooSmallError(
            f"cutoff {cutoff} too small for |alpha|^2 = {intensity:.6g}; "
            f"need at least {math.ceil(required)}",
            field="cutoff",
        )

    n = np.arange(1, cutoff + 1)
    amplitudes = np.empty(cutoff + 1, dtype=np.complex128)
    amplitudes[0] = math.exp(-intensity / 2)
    amplitudes[1:] = amplitudes[0] * np.cumprod(alpha / np.sqrt(n))
    return amplitudes / np.linalg.norm(amplitudes)


def product_state(boson_state, spin_state):
    """|alpha> (x) |+-n> in the Fock-major product basis."""
    return np.kron(boson_state, spin_state)


def trial_observables(
    params, variant, u, v, theta, phi, pole, cutoff, hamiltonian=None
):
    """Numeric expectation values in |psi> = |alpha>|+-n>, alpha = u + i v.

    ``hamiltonian`` may be passed to reuse a matrix built by
    :func:`build_hamiltonian` with the same arguments.
    """
    boson_state = build_coherent(complex(u, v), cutoff)
    spin_state = build_scs(params.n_atoms, theta, phi, pole)
    psi = product_state(boson_state, spin_state)

    if hamiltonian is None:
        hamiltonian = build_hamiltonian(params, variant, cutoff)
    energy = np.vdot(psi, hamiltonian @ psi).real

    spin = spin_matrices(params.n_atoms)
    boson = boson_matrices(cutoff)
    jz = np.vdot(spin_state, spin.jz @ spin_state).real
    photons = np.vdot(boson_state, boson.number_op @ boson_state).real
    return TrialObservables(
        energy=float(energy),
        jz=float(jz),
        photons=float(photons),
        norm=float(np.linalg.norm(psi)),
    )


def trial_energy(params, variant, u, v, theta, phi, pole, cutoff):
    """<psi_+-|H|psi_+-> evaluated fully numerically."""
    return trial_observables(
        params, variant, u, v, theta, phi, pole, cutoff
    ).energy

"""
Copyright (c) dickemqs contributors.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

"""
Dense operator representations for the Dicke model.

Basis conventions used everywhere in dickemqs:

- spin basis |s, m> ordered m = s, s-1, ..., -s (index i <-> m = s - i);
- boson basis |n> ordered n = 0, ..., cutoff;
- product basis is Fock-major: index = n * (N + 1) + i, i.e. operators are
  built as ``np.kron(boson_op, spin_op)``.

Matrices are stored as complex128 even where they are real.
"""

import logging
from dataclasses import dataclass

import numpy as np

from dickemqs.common.errors import ResourceError, ValidationError
from dickemqs.core.params import (
    DEFAULT_MAX_DIMENSION,
    check_n_atoms,
    check_variant,
)


def _frozen(matrix):
    matrix.setflags(write=False)
    return matrix


@dataclass(frozen=True)
class SpinAlgebra:
    """Collective pseudo-spin operators for s = N/2."""

    n_atoms: int
    jx: np.ndarray
    jy: np.ndarray
    jz: np.ndarray
    jplus: np.ndarray
    jminus: np.ndarray

    @property
    def dim(self):
        return self.n_atoms + 1

    @property
    def s(self):
        return self.n_atoms / 2

    @property
    def m_values(self):
        return self.s - np.arange(self.dim)

    def along(self, n):
        """Return J . n for a 3-vector ``n``."""
        return n[0] * self.jx + n[1] * self.jy + n[2] * self.jz


@dataclass(frozen=True)
class BosonAlgebra:
    """Truncated single-mode boson operators on |0>, ..., |cutoff>."""

    cutoff: int
    a: np.ndarray
    adag: np.ndarray
    number_op: np.ndarray

    @property
    def dim(self):
        return self.cutoff + 1


def spin_matrices(n_atoms):
    """Build J_x, J_y, J_z, J_+ and J_- for N atoms (spin s = N/2)."""
    n_atoms = check_n_atoms(n_atoms)
    s = n_atoms / 2
    m = s - np.arange(n_atoms + 1)

    # J_+ |s, m> = sqrt(s(s+1) - m(m+1)) |s, m+1>, and m+1 sits one row up.
    ladder = np.sqrt(s * (s + 1) - m[1:] * (m[1:] + 1))
    jplus = np.diag(ladder, k=1).astype(np.complex128)
    jminus = jplus.T.copy()

    jx = 0.5 * (jplus + jminus)
    jy = -0.5j * (jplus - jminus)
    jz = np.diag(m).astype(np.complex128)

    return SpinAlgebra(
        n_atoms=n_atoms,
        jx=_frozen(jx),
        jy=_frozen(jy),
        jz=_frozen(jz),
        jplus=_frozen(jplus),
        jminus=_frozen(jminus),
    )


def check_cutoff(cutoff):
    if isinstance(cutoff, bool) or not isinstance(
        cutoff, (int, np.integer)
    ):
        raise ValidationError(
            f"cutoff must be an integer, got {cutoff!r}", field="cutoff"
        )
    if cutoff < 1:
        raise ValidationError(
            f"cutoff must be >= 1, got {cutoff}", field="cutoff"
        )
    return int(cutoff)


def boson_matrices(cutoff):
    """Build a, a^dagger and a^dagger a truncated at Fock level ``cutoff``."""
    cutoff = check_cutoff(cutoff)
    n = np.arange(cutoff + 1)
    a = np.diag(np.sqrt(n[1:]), k=1).astype(np.complex128)
    adag = a.T.copy()
    number_op = np.diag(n).astype(np.complex128)
    return BosonAlgebra(
        cutoff=cutoff,
        a=_frozen(a),
        adag=_frozen(adag),
        number_op=_frozen(number_op),
    )


def product_dimension(n_atoms, cutoff):
    return (cutoff + 1) * (n_atoms + 1)


def check_dimension(n_atoms, cutoff, max_dimension=DEFAULT_MAX_DIMENSION):
    dim = product_dimension(n_atoms, cutoff)
    if dim > max_dimension:
        raise ResourceError(
            f"Hilbert-space dimension {dim} exceeds the limit "
            f"{max_dimension}",
            n_atoms=n_atoms,
            cutoff=cutoff,
        )
    return dim


def build_hamiltonian(
    params, variant, cutoff, max_dimension=DEFAULT_MAX_DIMENSION
):
    """Dicke Hamiltonian in the truncated Fock (x) spin product space.

    H = omega a^dag a (x) I + I (x) Omega J_z + H_sb with

    - full: H_sb = g / sqrt(N) (a^dag + a) (x) J_x
    - rwa:  H_sb = g / (2 sqrt(N)) [(a + a^dag) (x) J_x
                                    + i (a - a^dag) (x) J_y]

    Returns a complex128 matrix whose imaginary part is exactly zero.
    """
    variant = check_variant(variant)
    cutoff = check_cutoff(cutoff)
    check_dimension(params.n_atoms, cutoff, max_dimension)

    spin = spin_matrices(params.n_atoms)
    boson = boson_matrices(cutoff)
    eye_s = np.eye(spin.dim, dtype=np.complex128)
    eye_b = np.eye(boson.dim, dtype=np.complex128)
    sqrt_n = np.sqrt(params.n_atoms)

    hamiltonian = params.omega * np.kron(boson.number_op, eye_s)
    hamiltonian += params.Omega * np.kron(eye_b, spin.jz)
    quadrature = boson.a + boson.adag
    if variant == "full":
        hamiltonian += (params.g / sqrt_n) * np.kron(quadrature, spin.jx)
    else:
        coupling = np.kron(quadrature, spin.jx)
        coupling += 1j * np.kron(boson.a - boson.adag, spin.jy)
        hamiltonian += (params.g / (2 * sqrt_n)) * coupling

    assert not np.any(
        hamiltonian.imag
    ), f"{variant} Hamiltonian must be real in the Fock-major basis"
    logging.debug(
        f"Built {variant} Hamiltonian: N={params.n_atoms}, "
        f"cutoff={cutoff}, dim={hamiltonian.shape[0]}"
    )
    return hamiltonian


def excitation_numbers(n_atoms, cutoff):
    """Diagonal of N_ex = a^dag a (x) I + I (x) (J_z + s), Fock-major."""
    n = np.arange(cutoff + 1)
    # m + s = N - i for spin index i
    spin_excitations = n_atoms - np.arange(n_atoms + 1)
    return (n[:, None] + spin_excitations[None, :]).ravel()


def excitation_number_operator(n_atoms, cutoff):
    return np.diag(excitation_numbers(n_atoms, cutoff)).astype(np.complex128)


def parity_operator(n_atoms, cutoff):
    """Pi = exp(i pi N_ex), diagonal with entries +-1."""
    signs = 1 - 2 * (excitation_numbers(n_atoms, cutoff) % 2)
    return np.diag(signs).astype(np.complex128)


def effective_spin_hamiltonian(params, variant, u, v):
    """Spin Hamiltonian left after taking the boson coherent-state mean,
    H_es(alpha) = omega |alpha|^2 + H_s(alpha), alpha = u + i v.

    - full: H_s = Omega J_z + (2 g u / sqrt(N)) J_x
    - rwa:  H_s = Omega J_z + (g / sqrt(N)) (u J_x - v J_y)
    """
    variant = check_variant(variant)
    spin = spin_matrices(params.n_atoms)
    sqrt_n = np.sqrt(params.n_atoms)
    h_s = params.Omega * spin.jz
    if variant == "full":
        h_s = h_s + (2 * params.g * u / sqrt_n) * spin.jx
    else:
        h_s = h_s + (params.g / sqrt_n) * (u * spin.jx - v * spin.jy)
    intensity = u * u + v * v
    return params.omega * intensity * np.eye(spin.dim) + h_s

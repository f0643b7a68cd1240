"""
Copyright (c) dickemqs contributors.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

"""
Exact diagonalization of the truncated Dicke Hamiltonian with automatic
Fock-cutoff convergence. This is the oracle the variational results are
checked against.
"""

import logging
import math
from collections import namedtuple
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np
import scipy.linalg

from dickemqs.common.errors import ConvergenceError, ValidationError
from dickemqs.core.operators import (
    build_hamiltonian,
    excitation_numbers,
    product_dimension,
)
from dickemqs.core.params import (
    DEFAULT_MAX_DIMENSION,
    check_n_atoms,
    check_variant,
    make_params,
)
from dickemqs.variational.closed_form import (
    branch_energy,
    stationary_intensity,
)

# Two lowest levels closer than this are reported as near-degenerate.
DEGENERACY_THRESHOLD = 1e-6
RESIDUAL_TOL = 1e-8
# Photons added on top of the variational intensity for the first cutoff.
SEED_MARGIN = 20


@dataclass(frozen=True)
class CutoffPolicy:
    """How the Fock cutoff is grown until the ground energy converges.

    Args:
        initial (int, optional): First cutoff. ``None`` seeds it from the
            variational photon number, ceil(|alpha|^2) + 20.
        growth (float): Multiplicative step between cutoffs (> 1).
        energy_tol (float): Convergence tolerance on E / N between two
            successive cutoffs.
        max_cutoff (int): Hard cap on the cutoff.
        max_dimension (int): Largest dense matrix allowed.
        use_symmetry (bool): Diagonalize parity (full) or excitation-number
            (rwa) blocks separately.
    """

    initial: Optional[int] = None
    growth: float = 1.5
    energy_tol: float = 1e-8
    max_cutoff: int = 400
    max_dimension: int = DEFAULT_MAX_DIMENSION
    use_symmetry: bool = False

    def __post_init__(self):
        if self.initial is not None and self.initial < 1:
            raise ValidationError(
                f"initial cutoff must be >= 1, got {self.initial}",
                field="initial",
            )
        if not self.growth > 1:
            raise ValidationError(
                f"growth must be > 1, got {self.growth}", field="growth"
            )
        if not self.energy_tol > 0:
            raise ValidationError(
                f"energy_tol must be > 0, got {self.energy_tol}",
                field="energy_tol",
            )
        if self.max_cutoff < 1:
            raise ValidationError(
                f"max_cutoff must be >= 1, got {self.max_cutoff}",
                field="max_cutoff",
            )

    @classmethod
    def from_config(cls, config):
        return cls(**(config or {}))

    def first_cutoff(self, params, variant):
        if self.initial is not None:
            cutoff = self.initial
        else:
            intensity = stationary_intensity(params, variant)
            cutoff = math.ceil(intensity) + SEED_MARGIN
        return min(cutoff, self.max_cutoff)

    def next_cutoff(self, cutoff):
        grown = max(cutoff + 1, math.ceil(cutoff * self.growth))
        return min(grown, self.max_cutoff)


@dataclass(frozen=True)
class ExactResult:
    energy: float
    energy_per_atom: float
    jz: float
    photons: float
    cutoff_used: int
    eigen_residual: float
    converged: bool
    near_degenerate: bool = False
    level_gap: float = math.inf
    trace: Tuple[Tuple[int, float], ...] = field(default=(), repr=False)


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray = field(repr=False)
    residuals: np.ndarray
    cutoff_used: int
    trace: Tuple[Tuple[int, float], ...] = field(default=(), repr=False)


ScanRow = namedtuple(
    "ScanRow",
    [
        "n_atoms",
        "exact_per_atom",
        "variational_per_atom",
        "gap_per_atom",
        "cutoff_used",
    ],
)


def _lowest_eigenpairs(hamiltonian, k, labels=None):
    """k lowest eigenpairs of a real symmetric matrix, optionally solved
    block by block over the symmetry ``labels`` of the basis states.
    """
    dim = hamiltonian.shape[0]
    if labels is None:
        return scipy.linalg.eigh(
            hamiltonian, subset_by_index=[0, min(k, dim) - 1]
        )

    values, vectors = [], []
    for label in np.unique(labels):
        idx = np.flatnonzero(labels == label)
        block = hamiltonian[np.ix_(idx, idx)]
        kk = min(k, len(idx))
        block_vals, block_vecs = scipy.linalg.eigh(
            block, subset_by_index=[0, kk - 1]
        )
        embedded = np.zeros((dim, kk))
        embedded[idx, :] = block_vecs
        values.append(block_vals)
        vectors.append(embedded)
    values = np.concatenate(values)
    vectors = np.concatenate(vectors, axis=1)
    order = np.argsort(values, kind="stable")[:k]
    return values[order], vectors[:, order]


def _symmetry_labels(params, variant, cutoff):
    labels = excitation_numbers(params.n_atoms, cutoff)
    # full Dicke only conserves the parity of N_ex
    return labels % 2 if variant == "full" else labels


def _check_monotone(trace, params):
    for (c0, e0), (c1, e1) in zip(trace, trace[1:]):
        if e1 > e0 + 1e-10 * max(1.0, abs(e0)):
            logging.warning(
                f"Ground energy rose from {e0:.15g} (cutoff {c0}) to "
                f"{e1:.15g} (cutoff {c1}) for N={params.n_atoms}, "
                f"g={params.g}"
            )


def _converge(params, variant, policy, k, n_converged):
    """Diagonalize at growing cutoffs until the ``n_converged`` lowest
    levels change by less than ``policy.energy_tol`` per atom.
    """
    variant = check_variant(variant)
    cutoff = policy.first_cutoff(params, variant)
    dim = product_dimension(params.n_atoms, cutoff)
    if k > dim:
        raise ValidationError(
            f"k={k} exceeds the Hilbert-space dimension {dim}", field="k"
        )

    trace = []
    previous = None
    while True:
        hamiltonian = build_hamiltonian(
            params, variant, cutoff, policy.max_dimension
        ).real
        labels = (
            _symmetry_labels(params, variant, cutoff)
            if policy.use_symmetry
            else None
        )
        values, vectors = _lowest_eigenpairs(hamiltonian, k, labels)
        trace.append((cutoff, float(values[0])))
        logging.debug(
            f"N={params.n_atoms} g={params.g} {variant}: cutoff {cutoff} "
            f"-> E0={values[0]:.15g}"
        )

        if previous is not None:
            change = np.max(
                np.abs(values[:n_converged] - previous[:n_converged])
            )
            if change / params.n_atoms < policy.energy_tol:
                _check_monotone(trace, params)
                residuals = np.linalg.norm(
                    hamiltonian @ vectors - vectors * values, axis=0
                )
                bound = RESIDUAL_TOL * np.maximum(1.0, np.abs(values))
                if np.any(residuals >= bound):
                    raise ConvergenceError(
                        "Eigensolver residual above tolerance",
                        trace=trace,
                        residual=float(np.max(residuals)),
                    )
                return values, vectors, residuals, cutoff, tuple(trace)

        if cutoff >= policy.max_cutoff:
            raise ConvergenceError(
                f"No cutoff convergence up to max_cutoff={policy.max_cutoff}",
                trace=trace,
                n_atoms=params.n_atoms,
                g=params.g,
                variant=variant,
            )
        previous = values
        cutoff = policy.next_cutoff(cutoff)


def exact_ground(params, variant, policy=None):
    """Converged ground state of the truncated Hamiltonian.

    Near-degenerate ground levels (parity doublets deep in the superradiant
    phase) are flagged; the lowest eigenvalue is returned either way.
    """
    policy = policy or CutoffPolicy()
    values, vectors, residuals, cutoff, trace = _converge(
        params, variant, policy, k=2, n_converged=1
    )

    ground = vectors[:, 0]
    amplitudes = ground.reshape(cutoff + 1, params.n_atoms + 1)
    probabilities = np.abs(amplitudes) ** 2
    photons = float(probabilities.sum(axis=1) @ np.arange(cutoff + 1))
    m_values = params.s - np.arange(params.n_atoms + 1)
    jz = float(probabilities.sum(axis=0) @ m_values)

    gap = float(values[1] - values[0]) if len(values) > 1 else math.inf
    near_degenerate = gap < DEGENERACY_THRESHOLD
    if near_degenerate:
        logging.warning(
            f"Near-degenerate ground level (gap {gap:.3g}) for "
            f"N={params.n_atoms}, g={params.g}, {variant}"
        )

    energy = float(values[0])
    return ExactResult(
        energy=energy,
        energy_per_atom=energy / params.n_atoms,
        jz=jz,
        photons=photons,
        cutoff_used=cutoff,
        eigen_residual=float(residuals[0]),
        converged=True,
        near_degenerate=near_degenerate,
        level_gap=gap,
        trace=trace,
    )


def low_spectrum(params, variant, k, policy=None):
    """The k lowest eigenpairs (ascending), all converged in the cutoff.

    ``eigenvectors`` holds one orthonormal column per level in the
    Fock-major product basis of the final cutoff.
    """
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or k < 1:
        raise ValidationError(f"k must be an integer >= 1, got {k}", field="k")
    policy = policy or CutoffPolicy()
    values, vectors, residuals, cutoff, trace = _converge(
        params, variant, policy, k=k, n_converged=k
    )
    return Spectrum(
        eigenvalues=values,
        eigenvectors=vectors,
        residuals=residuals,
        cutoff_used=cutoff,
        trace=trace,
    )


def convergence_scan(params, variant, n_atoms_list, policy=None):
    """Exact and variational ground energies per atom for several N at the
    coupling of ``params``. ``gap_per_atom`` is variational minus exact.
    """
    if not n_atoms_list:
        raise ValidationError(
            "n_atoms_list must not be empty", field="n_atoms_list"
        )
    rows = []
    for n_atoms in n_atoms_list:
        n_atoms = check_n_atoms(n_atoms)
        point = make_params(params.omega, params.Omega, params.g, n_atoms)
        exact = exact_ground(point, variant, policy)
        variational = branch_energy(point, variant, "minus").energy_per_atom
        gap = variational - exact.energy_per_atom
        if gap < -1e-8:
            logging.warning(
                f"Rayleigh-Ritz bound violated at N={n_atoms}: gap {gap:.3g}"
            )
        rows.append(
            ScanRow(
                n_atoms=n_atoms,
                exact_per_atom=exact.energy_per_atom,
                variational_per_atom=variational,
                gap_per_atom=gap,
                cutoff_used=exact.cutoff_used,
            )
        )
    return rows


def perturbative_levels(params):
    """Second-order perturbation theory for the two lowest levels of the
    full model, valid for small g and omega < Omega:

        E0 = -N Omega / 2 - g^2 / (4 (omega + Omega))
        E1 = E0 + omega + g^2 / (4 (omega - Omega))
                - g^2 / (4 (omega + Omega))
    """
    if not params.omega < params.Omega:
        raise ValidationError(
            "perturbative levels need omega < Omega", field="omega"
        )
    g_sq = params.g ** 2
    w, big_w = params.omega, params.Omega
    e0 = -0.5 * params.n_atoms * big_w - g_sq / (4 * (w + big_w))
    e1 = e0 + w + g_sq / (4 * (w - big_w)) - g_sq / (4 * (w + big_w))
    return e0, e1

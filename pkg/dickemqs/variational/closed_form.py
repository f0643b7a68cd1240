"""
Copyright (c) dickemqs contributors.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

"""
Closed-form results of the spin-coherent-state variational treatment.

The trial state is a boson coherent state |alpha>, alpha = u + i v, times a
spin coherent state |+-n>. Minimising over the spin direction first leaves
the energy functional

    E_+-(u, v) = omega |alpha|^2 +- (N / 2) r(u, v),

where r is the length of the effective field acting on the pseudo-spin. All
branch quantities below are written in terms of the ratio x = g / g_c so that
the full and RWA variants share one code path (only g_c and the intensity
prefactor differ).
"""

import math
from collections import namedtuple
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from dickemqs.core.params import BRANCHES, check_branch, check_variant

# Degeneracy of the stationary field in the superradiant phase.
SUPERRADIANT_DEGENERACY = {"full": "sign-pair", "rwa": "circle"}

# |alpha|^2 = N Omega^2 / (k g^2) (x^4 - 1); the RWA carries the extra
# factor 4 relative to the full model.
INTENSITY_DIVISOR = {"full": 4.0, "rwa": 1.0}

StationaryPoint = namedtuple("StationaryPoint", ["field", "degeneracy"])


@dataclass(frozen=True)
class Tolerances:
    """Comparison tolerances. Closed forms are exact, the slack only covers
    transcendental evaluation; the minimizer gets its own looser bounds.
    """

    energy_atol: float = 1e-10
    rtol: float = 1e-8
    minimizer_energy_atol: float = 1e-8
    minimizer_intensity_rtol: float = 1e-6

    @classmethod
    def from_config(cls, config):
        return cls(**(config or {}))


@dataclass(frozen=True)
class FieldPoint:
    """Boson coherent-state parameter alpha = u + i v."""

    u: float
    v: float

    @property
    def intensity(self):
        return self.u * self.u + self.v * self.v

    @property
    def alpha(self):
        return complex(self.u, self.v)


@dataclass(frozen=True)
class EffectiveSpinFrame:
    """Effective field r (cos(theta) e_z + sin(theta)(cos(phi) e_x +
    sin(phi) e_y)) felt by the pseudo-spin at a given alpha.
    """

    r: float
    theta: float
    phi: float


@dataclass(frozen=True)
class BranchResult:
    branch: str
    variant: str
    energy: float
    energy_per_atom: float
    phase: str
    field: FieldPoint
    # None for the plus branch: only the ground-branch population is known
    # in closed form.
    jz: Optional[float]
    gamma: float
    critical_coupling: float
    degeneracy: str
    notes: Tuple[str, ...] = ()


def critical_coupling(params, variant):
    """g_c = sqrt(omega Omega) (full) or 2 sqrt(omega Omega) (rwa)."""
    variant = check_variant(variant)
    g_c = math.sqrt(params.omega * params.Omega)
    return g_c if variant == "full" else 2.0 * g_c


def coupling_ratio(params, variant):
    return params.g / critical_coupling(params, variant)


def phase_label(params, variant):
    # g == g_c is classified as normal.
    if params.g <= critical_coupling(params, variant):
        return "normal"
    return "superradiant"


def effective_field_length(params, variant, u, v):
    """r(u, v) for either variant; accepts numpy arrays."""
    variant = check_variant(variant)
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    n_atoms = params.n_atoms
    if variant == "full":
        transverse_sq = (2.0 * params.g * u) ** 2 / n_atoms
    else:
        transverse_sq = params.g ** 2 * (u * u + v * v) / n_atoms
    return np.sqrt(params.Omega ** 2 + transverse_sq)


def energy_functional(params, variant, u, v, branch):
    """E_+-(u, v) = omega (u^2 + v^2) +- (N / 2) r(u, v).

    Works elementwise on arrays; scalar inputs give a float.
    """
    branch = check_branch(branch)
    sign = -1.0 if branch == "minus" else 1.0
    u_arr = np.asarray(u, dtype=float)
    v_arr = np.asarray(v, dtype=float)
    r = effective_field_length(params, variant, u_arr, v_arr)
    energy = params.omega * (u_arr * u_arr + v_arr * v_arr)
    energy = energy + sign * 0.5 * params.n_atoms * r
    if energy.ndim == 0:
        return float(energy)
    return energy


def effective_frame(params, variant, u, v):
    """Angles that turn the effective spin Hamiltonian into r J . n."""
    variant = check_variant(variant)
    scale = params.g / math.sqrt(params.n_atoms)
    if variant == "full":
        bx, by = 2.0 * scale * u, 0.0
    else:
        bx, by = scale * u, -scale * v
    transverse = math.hypot(bx, by)
    r = math.hypot(params.Omega, transverse)
    theta = math.atan2(transverse, params.Omega)
    phi = math.atan2(by, bx) % (2 * math.pi) if transverse > 0 else 0.0
    if phi >= 2 * math.pi:
        phi = 0.0
    return EffectiveSpinFrame(r=r, theta=theta, phi=phi)


def stationary_intensity(params, variant):
    variant = check_variant(variant)
    if phase_label(params, variant) == "normal":
        return 0.0
    x = coupling_ratio(params, variant)
    prefactor = params.n_atoms * params.Omega ** 2
    prefactor /= INTENSITY_DIVISOR[variant] * params.g ** 2
    return prefactor * (x ** 4 - 1.0)


def stationary_field(params, variant):
    """Stationary point of E_-: canonical representative u >= 0, v = 0 plus
    a degeneracy descriptor (point, sign-pair or circle).
    """
    intensity = stationary_intensity(params, variant)
    if intensity == 0.0:
        return StationaryPoint(field=FieldPoint(0.0, 0.0), degeneracy="point")
    return StationaryPoint(
        field=FieldPoint(math.sqrt(intensity), 0.0),
        degeneracy=SUPERRADIANT_DEGENERACY[variant],
    )


def _branch_energy_value(params, variant, branch):
    quarter = 0.25 * params.n_atoms * params.Omega
    if phase_label(params, variant) == "normal":
        return -2.0 * quarter if branch == "minus" else 2.0 * quarter
    x_sq = coupling_ratio(params, variant) ** 2
    if branch == "minus":
        return -quarter * (x_sq + 1.0 / x_sq)
    return quarter * (3.0 * x_sq - 1.0 / x_sq)


def jz_expectation(params, variant):
    """<J_z> in the ground branch: -N/2 (normal), -(N/2)(g_c/g)^2 above."""
    half = 0.5 * params.n_atoms
    if phase_label(params, variant) == "normal":
        return -half
    return -half / coupling_ratio(params, variant) ** 2


def branch_energy(params, variant, branch):
    """Evaluate one MQS energy branch (minus = ground, plus = excited).

    The plus branch is reported at the minus-branch stationary field: the
    plus functional has no superradiant stationary point of its own, and its
    value there reproduces the closed form (NOmega/4)(3x^2 - 1/x^2).
    """
    variant = check_variant(variant)
    branch = check_branch(branch)
    point = stationary_field(params, variant)
    energy = _branch_energy_value(params, variant, branch)

    notes = []
    if branch == "plus":
        notes.append("jz unavailable for the plus branch")
    if variant == "rwa":
        notes.append("gamma for rwa is 2 pi |alpha|^2 with the rwa intensity")

    return BranchResult(
        branch=branch,
        variant=variant,
        energy=energy,
        energy_per_atom=energy / params.n_atoms,
        phase=phase_label(params, variant),
        field=point.field,
        jz=jz_expectation(params, variant) if branch == "minus" else None,
        gamma=2.0 * math.pi * point.field.intensity,
        critical_coupling=critical_coupling(params, variant),
        degeneracy=point.degeneracy,
        notes=tuple(notes),
    )


ConsistencyCheck = namedtuple(
    "ConsistencyCheck",
    ["minus_gap_per_atom", "plus_gap_per_atom", "jz_gap", "ok"],
)


def consistency_check(params, variant, tolerances=None):
    """Re-evaluate the functional and the effective frame at the stationary
    field and compare with the branch closed forms.

    Energies per atom must agree to ``energy_atol``; <J_z> = -(N/2) cos(theta)
    must agree to ``rtol`` relative.
    """
    tolerances = tolerances or Tolerances()
    field = stationary_field(params, variant).field
    gaps = {}
    for branch in BRANCHES:
        functional = energy_functional(
            params, variant, field.u, field.v, branch
        )
        closed = _branch_energy_value(params, variant, branch)
        gaps[branch] = abs(functional - closed) / params.n_atoms
    frame = effective_frame(params, variant, field.u, field.v)
    jz_frame = -0.5 * params.n_atoms * math.cos(frame.theta)
    jz_closed = jz_expectation(params, variant)
    jz_gap = abs(jz_frame - jz_closed) / abs(jz_closed)
    ok = (
        max(gaps.values()) <= tolerances.energy_atol
        and jz_gap <= tolerances.rtol
    )
    return ConsistencyCheck(
        minus_gap_per_atom=gaps["minus"],
        plus_gap_per_atom=gaps["plus"],
        jz_gap=jz_gap,
        ok=ok,
    )

"""
Copyright (c) dickemqs contributors.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

import math
import numbers
from dataclasses import dataclass, replace

from dickemqs.common.errors import ValidationError

VARIANTS = ("full", "rwa")
POLES = ("north", "south")
BRANCHES = ("minus", "plus")

# Largest dense matrix dimension the builders will allocate.
DEFAULT_MAX_DIMENSION = 20000


@dataclass(frozen=True)
class ModelParams:
    """Physical inputs of the Dicke Hamiltonian.

    Args:
        omega (float): Boson frequency.
        Omega (float): Atomic level spacing.
        g (float): Collective coupling strength.
        n_atoms (int): Number of two-level atoms N.
    """

    omega: float
    Omega: float
    g: float
    n_atoms: int

    @property
    def s(self):
        """Pseudo-spin s = N/2."""
        return self.n_atoms / 2

    @property
    def spin_dim(self):
        return self.n_atoms + 1

    def with_coupling(self, g):
        return make_params(self.omega, self.Omega, g, self.n_atoms)

    def scaled(self, factor):
        """Multiply every energy scale (omega, Omega, g) by ``factor``."""
        return replace(
            self,
            omega=self.omega * factor,
            Omega=self.Omega * factor,
            g=self.g * factor,
        )


def _check_finite(name, value):
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise ValidationError(
            f"{name} must be a real number, got {value!r}", field=name
        )
    if not math.isfinite(value):
        raise ValidationError(
            f"{name} must be finite, got {value}", field=name
        )


def check_n_atoms(n_atoms, field="n_atoms"):
    if isinstance(n_atoms, bool) or not isinstance(n_atoms, numbers.Integral):
        raise ValidationError(
            f"{field} must be an integer, got {n_atoms!r}", field=field
        )
    if n_atoms < 1:
        raise ValidationError(
            f"{field} must be >= 1, got {n_atoms}", field=field
        )
    return int(n_atoms)


def check_variant(variant):
    if variant not in VARIANTS:
        raise ValidationError(
            f"variant must be one of {VARIANTS}, got {variant!r}",
            field="variant",
        )
    return variant


def check_pole(pole):
    if pole not in POLES:
        raise ValidationError(
            f"pole must be one of {POLES}, got {pole!r}", field="pole"
        )
    return pole


def check_branch(branch):
    if branch not in BRANCHES:
        raise ValidationError(
            f"branch must be one of {BRANCHES}, got {branch!r}",
            field="branch",
        )
    return branch


def make_params(omega, Omega, g, n_atoms):
    """Validate the physical inputs and return a :class:`ModelParams`."""
    for name, value in (("omega", omega), ("Omega", Omega), ("g", g)):
        _check_finite(name, value)
    if omega <= 0:
        raise ValidationError(f"omega must be > 0, got {omega}", field="omega")
    if Omega <= 0:
        raise ValidationError(f"Omega must be > 0, got {Omega}", field="Omega")
    if g < 0:
        raise ValidationError(f"g must be >= 0, got {g}", field="g")
    n_atoms = check_n_atoms(n_atoms)
    return ModelParams(
        omega=float(omega), Omega=float(Omega), g=float(g), n_atoms=n_atoms
    )

"""
Copyright (c) dickemqs contributors.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

"""
Parameter sweeps over the coupling g. A sweep evaluates the requested
observables at every grid point (closed forms, and exact diagonalization for
the ``exact_*`` columns) on a bounded thread pool and assembles the rows in
g order.
"""

import logging
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Optional, Tuple

import numpy as np
from tqdm import tqdm

import dickemqs
from dickemqs.common.errors import (
    DickeError,
    MinimizationError,
    SpecificationError,
    ValidationError,
)
from dickemqs.common.utils import default_thread_count
from dickemqs.core.params import VARIANTS, check_n_atoms, make_params
from dickemqs.exact.diagonalization import CutoffPolicy, exact_ground
from dickemqs.variational.closed_form import (
    Tolerances,
    branch_energy,
    critical_coupling,
)
from dickemqs.variational.geometric_phase import (
    geometric_phase,
    gp_derivative,
)
from dickemqs.variational.minimizer import cross_check

OBSERVABLES = (
    "e_minus",
    "e_plus",
    "jz",
    "intensity",
    "gamma",
    "dgamma_dg",
    "exact_energy",
    "exact_jz",
    "exact_photons",
)
EXACT_OBSERVABLES = ("exact_energy", "exact_jz", "exact_photons")
SWEEP_VARIANTS = VARIANTS + ("both",)
FORMATS = ("csv", "svg", "both")
CONFIG_SECTIONS = (
    "model",
    "grid",
    "output",
    "cutoff",
    "tolerances",
    "minimizer",
)

# Grid points sitting exactly on g_c are moved this far to the right when
# the one-sided derivative column is requested.
CRITICAL_SHIFT = 1e-12
# Slack on the Rayleigh-Ritz bound (variational - exact >= -slack).
RAYLEIGH_RITZ_SLACK = 1e-8

GAMMA_OBSERVABLES = {"gamma", "dgamma_dg"}
RWA_GAMMA_NOTE = (
    "extension: rwa gamma is 2 pi |alpha|^2 with the rwa intensity, "
    "evaluated with the full-model formula"
)

ComparisonReport = namedtuple("ComparisonReport", ["table", "summary"])


def _plain(value):
    """Convert numpy scalars and tuples into YAML-safe builtins."""
    if isinstance(value, dict):
        return {_plain(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, np.generic):
        return value.item()
    return value


@dataclass(frozen=True)
class SweepSpec:
    """Everything a sweep needs; built from the merged run config."""

    variant: str = "full"
    omega: float = 1.0
    Omega: float = 1.0
    n_atoms: Tuple[int, ...] = (1,)
    g_start: float = 0.0
    g_stop: float = 2.0
    g_count: int = 201
    observables: Tuple[str, ...] = ("e_minus", "e_plus", "jz")
    output: str = "results/sweep"
    format: str = "csv"
    cutoff: CutoffPolicy = field(default_factory=CutoffPolicy)
    tolerances: Tolerances = field(default_factory=Tolerances)
    minimizer: dict = field(default_factory=dict)
    threads: Optional[int] = None
    verify: bool = False
    show_progress: bool = True

    def __post_init__(self):
        if self.variant not in SWEEP_VARIANTS:
            raise ValidationError(
                f"variant must be one of {SWEEP_VARIANTS}, "
                f"got {self.variant!r}",
                field="variant",
            )
        if self.format not in FORMATS:
            raise ValidationError(
                f"format must be one of {FORMATS}, got {self.format!r}",
                field="format",
            )
        if not self.n_atoms:
            raise ValidationError("n_atoms must not be empty", field="n_atoms")
        for n_atoms in self.n_atoms:
            check_n_atoms(n_atoms)
        if not self.g_start >= 0:
            raise ValidationError(
                f"grid start must be >= 0, got {self.g_start}", field="start"
            )
        if not self.g_stop > self.g_start:
            raise ValidationError(
                f"grid stop ({self.g_stop}) must exceed start "
                f"({self.g_start})",
                field="stop",
            )
        if (
            isinstance(self.g_count, bool)
            or not isinstance(self.g_count, (int, np.integer))
            or self.g_count < 2
        ):
            raise ValidationError(
                f"grid count must be an integer >= 2, got {self.g_count!r}",
                field="count",
            )
        unknown = [o for o in self.observables if o not in OBSERVABLES]
        if unknown:
            raise ValidationError(
                f"Unknown observables {unknown}; choose from {OBSERVABLES}",
                field="observables",
            )
        if len(set(self.observables)) != len(self.observables):
            raise ValidationError(
                "Observables must not repeat", field="observables"
            )
        if self.threads is not None and self.threads < 1:
            raise ValidationError(
                f"threads must be >= 1, got {self.threads}", field="threads"
            )
        # validates the physical parameters once, up front
        make_params(self.omega, self.Omega, self.g_start, self.n_atoms[0])

    @classmethod
    def from_config(cls, config):
        for section in CONFIG_SECTIONS:
            value = config.get(section)
            if value is not None and not isinstance(value, dict):
                raise ValidationError(
                    f"Config section {section!r} must be a mapping, got "
                    f"{value!r}",
                    field=section,
                )
        model = config.get("model") or {}
        grid = config.get("grid") or {}
        output = config.get("output") or {}
        n_atoms = model.get("n_atoms", 1)
        if isinstance(n_atoms, (int, np.integer)):
            n_atoms = [n_atoms]
        try:
            return cls(
                variant=model.get("variant", "full"),
                omega=model.get("omega", 1.0),
                Omega=model.get("Omega", 1.0),
                n_atoms=tuple(n_atoms),
                g_start=grid.get("start", 0.0),
                g_stop=grid.get("stop", 2.0),
                g_count=grid.get("count", 201),
                observables=tuple(config.get("observables") or ()),
                output=output.get("prefix", "results/sweep"),
                format=output.get("format", "csv"),
                cutoff=CutoffPolicy.from_config(config.get("cutoff")),
                tolerances=Tolerances.from_config(config.get("tolerances")),
                minimizer=dict(config.get("minimizer") or {}),
                threads=config.get("threads"),
                verify=bool(config.get("verify", False)),
                show_progress=bool(config.get("show_progress", True)),
            )
        except TypeError as e:
            raise ValidationError(f"Malformed config: {e}") from e

    @property
    def variants(self):
        return VARIANTS if self.variant == "both" else (self.variant,)

    @property
    def needs_exact(self):
        return any(o in EXACT_OBSERVABLES for o in self.observables)

    @property
    def thread_count(self):
        return self.threads or default_thread_count()

    def suffix(self, variant):
        return f"_{variant}" if self.variant == "both" else ""

    def g_grid(self):
        """The coupling grid and any notes about points that were moved."""
        grid = np.linspace(self.g_start, self.g_stop, self.g_count)
        notes = []
        if "dgamma_dg" in self.observables:
            for variant in self.variants:
                g_c = critical_coupling(
                    make_params(self.omega, self.Omega, 0.0, 1), variant
                )
                hits = grid == g_c
                if np.any(hits):
                    grid[hits] += CRITICAL_SHIFT
                    note = (
                        f"g = g_c = {g_c!r} ({variant}) shifted by "
                        f"+{CRITICAL_SHIFT} for the one-sided dgamma_dg"
                    )
                    logging.warning(note)
                    notes.append(note)
        return grid, notes


@dataclass
class SweepTable:
    """Row-major numeric table with named columns and a metadata block."""

    columns: Tuple[str, ...]
    rows: np.ndarray
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.columns = tuple(self.columns)
        self.rows = np.asarray(self.rows, dtype=float).reshape(
            -1, len(self.columns)
        )
        self.validate()

    def validate(self):
        if len(set(self.columns)) != len(self.columns):
            raise SpecificationError(
                f"Duplicate columns in {self.columns}", field="columns"
            )
        if "g" not in self.columns:
            return
        g = self.column("g")
        if "n_atoms" in self.columns:
            blocks = [
                g[self.column("n_atoms") == n]
                for n in np.unique(self.column("n_atoms"))
            ]
        else:
            blocks = [g]
        for block in blocks:
            if np.any(np.diff(block) <= 0):
                raise SpecificationError(
                    "g must be strictly increasing", field="g"
                )

    def column(self, name):
        try:
            idx = self.columns.index(name)
        except ValueError:
            raise SpecificationError(
                f"Column {name!r} not in table {self.columns}", field=name
            )
        return self.rows[:, idx]

    def __len__(self):
        return len(self.rows)


def sweep_columns(spec):
    columns = ["g"]
    for variant in spec.variants:
        for observable in spec.observables:
            name = observable + spec.suffix(variant)
            columns += [name, f"{name}_per_atom"]
    return tuple(columns)


def _point_values(spec, n_atoms, g):
    values = [g]
    params = make_params(spec.omega, spec.Omega, g, n_atoms)
    for variant in spec.variants:
        minus = branch_energy(params, variant, "minus")
        exact = None
        if spec.needs_exact:
            exact = exact_ground(params, variant, spec.cutoff)
        if spec.verify:
            check = cross_check(
                params, variant, spec.tolerances, **spec.minimizer
            )
            if not check.ok:
                raise MinimizationError(
                    "Numeric minimum disagrees with the closed form",
                    best=check.minimum,
                    variant=variant,
                )
        for observable in spec.observables:
            if observable == "e_minus":
                value = minus.energy
            elif observable == "e_plus":
                value = branch_energy(params, variant, "plus").energy
            elif observable == "jz":
                value = minus.jz
            elif observable == "intensity":
                value = minus.field.intensity
            elif observable == "gamma":
                value = geometric_phase(params, variant)
            elif observable == "dgamma_dg":
                value = gp_derivative(params, variant)
            elif observable == "exact_energy":
                value = exact.energy
            elif observable == "exact_jz":
                value = exact.jz
            else:
                value = exact.photons
            values += [value, value / n_atoms]
    return values


def _evaluate(point_fn, g):
    try:
        return point_fn(g)
    except DickeError as e:
        raise e.add_context(g=g)


def _map_ordered(fn, items, spec, desc):
    # executor.map yields in submission order and re-raises the first error;
    # points still queued at that moment are cancelled, not evaluated.
    with ThreadPoolExecutor(max_workers=spec.thread_count) as executor:
        try:
            return list(
                tqdm(
                    executor.map(fn, items),
                    total=len(items),
                    desc=desc,
                    disable=not spec.show_progress,
                )
            )
        except BaseException:
            executor.shutdown(wait=False, cancel_futures=True)
            raise


def _base_metadata(spec, n_atoms_list, notes):
    params = make_params(spec.omega, spec.Omega, 0.0, 1)
    metadata = {
        "tool": "dickemqs",
        "version": dickemqs.__version__,
        "variant": spec.variant,
        "omega": spec.omega,
        "Omega": spec.Omega,
        "n_atoms": list(n_atoms_list),
        "grid": {
            "start": spec.g_start,
            "stop": spec.g_stop,
            "count": spec.g_count,
        },
        "critical_coupling": {
            v: critical_coupling(params, v) for v in spec.variants
        },
        "tolerances": asdict(spec.tolerances),
        "notes": list(notes),
    }
    if spec.needs_exact:
        metadata["cutoff"] = asdict(spec.cutoff)
    return metadata


def _degeneracies(spec, n_atoms, grid):
    return {
        variant: sorted(
            {
                branch_energy(
                    make_params(spec.omega, spec.Omega, g, n_atoms),
                    variant,
                    "minus",
                ).degeneracy
                for g in grid
            }
        )
        for variant in spec.variants
    }


def run_sweep(spec, n_atoms=None):
    """Tabulate the requested observables over the g grid for one N.

    Args:
        spec (SweepSpec): Sweep description.
        n_atoms (int, optional): Atom number; defaults to the only entry of
            ``spec.n_atoms``.

    Returns:
        SweepTable: one row per g point. Every observable column has a
        ``_per_atom`` companion.
    """
    if n_atoms is None:
        if len(spec.n_atoms) != 1:
            raise ValidationError(
                "run_sweep needs an explicit n_atoms when the sweep lists "
                f"several: {spec.n_atoms}",
                field="n_atoms",
            )
        n_atoms = spec.n_atoms[0]
    n_atoms = check_n_atoms(n_atoms)
    grid, notes = spec.g_grid()

    logging.info(
        f"Sweeping {len(grid)} couplings in [{spec.g_start}, {spec.g_stop}] "
        f"for N={n_atoms} ({spec.variant}) on {spec.thread_count} threads"
    )
    rows = _map_ordered(
        lambda g: _evaluate(lambda x: _point_values(spec, n_atoms, x), g),
        [float(g) for g in grid],
        spec,
        desc=f"N={n_atoms}",
    )

    if "rwa" in spec.variants and set(spec.observables) & GAMMA_OBSERVABLES:
        notes = list(notes) + [RWA_GAMMA_NOTE]
    metadata = _base_metadata(spec, [n_atoms], notes)
    metadata["degeneracy"] = _degeneracies(spec, n_atoms, grid)
    return SweepTable(
        columns=sweep_columns(spec),
        rows=rows,
        metadata=_plain(metadata),
    )


COMPARE_QUANTITIES = ("energy", "jz", "photons")


def compare_columns(spec):
    columns = ["n_atoms", "g"]
    for variant in spec.variants:
        suffix = spec.suffix(variant)
        for quantity in COMPARE_QUANTITIES:
            columns += [
                f"{quantity}_variational{suffix}",
                f"{quantity}_exact{suffix}",
                f"{quantity}_gap{suffix}",
            ]
        columns.append(f"energy_gap_per_atom{suffix}")
    return tuple(columns)


def _compare_point(spec, n_atoms, g):
    values = [n_atoms, g]
    params = make_params(spec.omega, spec.Omega, g, n_atoms)
    for variant in spec.variants:
        minus = branch_energy(params, variant, "minus")
        exact = exact_ground(params, variant, spec.cutoff)
        pairs = (
            (minus.energy, exact.energy),
            (minus.jz, exact.jz),
            (minus.field.intensity, exact.photons),
        )
        for variational, exact_value in pairs:
            values += [variational, exact_value, variational - exact_value]
        values.append((minus.energy - exact.energy) / n_atoms)
    return values


def compare_report(spec):
    """Variational against exact ground state for every (N, g) pair.

    Gap columns are variational minus exact. The summary records whether the
    Rayleigh-Ritz bound holds and the largest energy gap per atom for
    every N.
    """
    grid, notes = spec.g_grid()
    points = [(n, float(g)) for n in spec.n_atoms for g in grid]
    logging.info(
        f"Comparing against exact diagonalization at {len(points)} points "
        f"(N in {list(spec.n_atoms)})"
    )
    rows = _map_ordered(
        lambda p: _evaluate(lambda g: _compare_point(spec, p[0], g), p[1]),
        points,
        spec,
        desc="compare",
    )
    table = SweepTable(columns=compare_columns(spec), rows=rows)

    n_column = table.column("n_atoms")
    rayleigh_ritz_ok = True
    max_gap = {}
    for variant in spec.variants:
        gaps = table.column(f"energy_gap_per_atom{spec.suffix(variant)}")
        if np.any(gaps < -RAYLEIGH_RITZ_SLACK):
            rayleigh_ritz_ok = False
            logging.warning(
                f"Rayleigh-Ritz bound violated ({variant}): "
                f"min gap per atom {gaps.min():.3g}"
            )
        for n_atoms in spec.n_atoms:
            key = n_atoms if spec.variant != "both" else f"{n_atoms}_{variant}"
            max_gap[key] = float(gaps[n_column == n_atoms].max())

    summary = {
        "rayleigh_ritz_ok": rayleigh_ritz_ok,
        "max_gap_per_atom": max_gap,
    }
    metadata = _base_metadata(spec, spec.n_atoms, notes)
    metadata["summary"] = summary
    table.metadata = _plain(metadata)
    logging.info(f"Comparison summary: {summary}")
    return ComparisonReport(table=table, summary=summary)

"""
Copyright (c) dickemqs contributors.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

import copy
import logging

from dickemqs.common.registry import registry
from dickemqs.common.utils import merge_dicts
from dickemqs.sweep.csv_io import emit_csv
from dickemqs.sweep.plots import PanelSpec, emit_svg
from dickemqs.sweep.table import SweepSpec, compare_report, run_sweep

BASE_CONFIG = {
    "model": {"omega": 1.0, "Omega": 1.0, "n_atoms": [1], "variant": "full"},
    "grid": {"start": 0.0, "stop": 2.0, "count": 201},
    "observables": ["e_minus", "e_plus", "jz", "intensity", "gamma"],
    "cutoff": {
        "initial": None,
        "growth": 1.5,
        "energy_tol": 1.0e-8,
        "max_cutoff": 400,
        "max_dimension": 20000,
        "use_symmetry": False,
    },
    "tolerances": {"energy_atol": 1.0e-10, "rtol": 1.0e-8},
    "minimizer": {"grid_points": 201, "max_rounds": 50},
    "output": {"prefix": "results/sweep", "format": "csv"},
    "threads": None,
    "verify": False,
    "show_progress": True,
}


def _task_defaults(**overrides):
    config, _ = merge_dicts(copy.deepcopy(BASE_CONFIG), overrides)
    return config


class BaseTask:
    default_config = BASE_CONFIG

    def __init__(self, config):
        self.config = config
        self.spec = SweepSpec.from_config(config)

    def output_prefix(self, n_atoms):
        prefix = self.spec.output
        if len(self.spec.n_atoms) > 1:
            prefix = f"{prefix}_N{n_atoms}"
        return prefix

    def panels(self):
        return None

    def write(self, table, prefix):
        written = []
        if self.spec.format in ("csv", "both"):
            written.append(emit_csv(table, f"{prefix}.csv"))
        if self.spec.format in ("svg", "both"):
            panels = self.panels()
            if panels is None:
                written.append(emit_svg(table, f"{prefix}.svg"))
            else:
                for name, panel in panels.items():
                    path = f"{prefix}{name}.svg"
                    written.append(emit_svg(table, path, panel))
        return written

    def run(self):
        written = []
        for n_atoms in self.spec.n_atoms:
            table = run_sweep(self.spec, n_atoms)
            written += self.write(table, self.output_prefix(n_atoms))
        return written


@registry.register_task("sweep")
class SweepTask(BaseTask):
    default_config = _task_defaults()


class FigureTask(BaseTask):
    preset = None

    def panels(self):
        if self.spec.variant != "both":
            return {"": self.preset()}
        return {f"_{v}": self.preset(f"_{v}") for v in self.spec.variants}


@registry.register_task("fig1")
class Fig1Task(FigureTask):
    default_config = _task_defaults(
        observables=["e_minus", "e_plus", "jz"],
        output={"prefix": "results/fig1", "format": "both"},
    )
    preset = staticmethod(PanelSpec.fig1)


@registry.register_task("fig2")
class Fig2Task(FigureTask):
    default_config = _task_defaults(
        observables=["gamma", "dgamma_dg"],
        output={"prefix": "results/fig2", "format": "both"},
    )
    preset = staticmethod(PanelSpec.fig2)


@registry.register_task("compare")
class CompareTask(BaseTask):
    default_config = _task_defaults(
        model={"n_atoms": [4, 8, 16, 32]},
        grid={"start": 0.5, "stop": 2.0, "count": 4},
        observables=["exact_energy", "exact_jz", "exact_photons"],
        output={"prefix": "results/compare", "format": "csv"},
    )

    def run(self):
        if self.spec.format != "csv":
            logging.warning("compare writes CSV only; ignoring SVG output")
        report = compare_report(self.spec)
        if not report.summary["rayleigh_ritz_ok"]:
            logging.warning("Comparison found Rayleigh-Ritz violations")
        return [emit_csv(report.table, f"{self.spec.output}.csv")]


@registry.register_task("exact")
class ExactTask(BaseTask):
    default_config = _task_defaults(
        model={"n_atoms": [4]},
        grid={"start": 0.0, "stop": 2.0, "count": 21},
        observables=["exact_energy", "exact_jz", "exact_photons", "e_minus"],
        output={"prefix": "results/exact", "format": "csv"},
    )

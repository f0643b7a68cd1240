"""
Copyright (c) dickemqs contributors.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

import argparse
from pathlib import Path

MODES = ["sweep", "fig1", "fig2", "compare", "exact"]


class Flags:
    def __init__(self):
        self.parser = argparse.ArgumentParser(
            description="Macroscopic quantum states of the Dicke model: "
            "variational energy branches, geometric phase and exact "
            "diagonalization checks"
        )
        self.add_core_args()
        self.add_model_args()
        self.add_run_args()

    def get_parser(self):
        return self.parser

    def add_core_args(self):
        self.parser.add_argument_group("Core Arguments")
        self.parser.add_argument(
            "mode",
            choices=MODES,
            help="What to run: a generic sweep, the two figure "
            "reproductions, the variational-vs-exact comparison or an "
            "exact-diagonalization sweep",
        )
        self.parser.add_argument(
            "--config",
            default=None,
            type=Path,
            help="Path to a YAML config file (flags take precedence)",
        )
        self.parser.add_argument(
            "--debug",
            action="store_true",
            help="Log at DEBUG level",
        )

    def add_model_args(self):
        self.parser.add_argument_group("Model Arguments")
        self.parser.add_argument(
            "--omega", default=None, type=float, help="Boson frequency"
        )
        self.parser.add_argument(
            "--Omega", default=None, type=float, help="Atomic level spacing"
        )
        self.parser.add_argument(
            "--n-atoms",
            default=None,
            type=int,
            nargs="+",
            help="Number of atoms N (one or more)",
        )
        self.parser.add_argument(
            "--variant",
            default=None,
            choices=["full", "rwa", "both"],
            help="Full Dicke coupling, rotating-wave approximation or both",
        )
        self.parser.add_argument(
            "--g-start", default=None, type=float, help="First coupling"
        )
        self.parser.add_argument(
            "--g-stop", default=None, type=float, help="Last coupling"
        )
        self.parser.add_argument(
            "--g-count",
            default=None,
            type=int,
            help="Number of coupling points (>= 2)",
        )
        self.parser.add_argument(
            "--observables",
            default=None,
            nargs="*",
            help="Observables to tabulate (sweep mode)",
        )

    def add_run_args(self):
        self.parser.add_argument_group("Run Arguments")
        self.parser.add_argument(
            "--out", default=None, type=str, help="Output path prefix"
        )
        self.parser.add_argument(
            "--format",
            default=None,
            choices=["csv", "svg", "both"],
            help="Output format",
        )
        self.parser.add_argument(
            "--cutoff-tol",
            default=None,
            type=float,
            help="Fock-cutoff convergence tolerance on E/N",
        )
        self.parser.add_argument(
            "--max-cutoff",
            default=None,
            type=int,
            help="Hard cap on the Fock cutoff",
        )
        self.parser.add_argument(
            "--threads",
            default=None,
            type=int,
            help="Worker threads for sweep points "
            "(default: $DICKE_NUM_THREADS or min(4, cpu count))",
        )


flags = Flags()

# Copyright (c) dickemqs contributors.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

__all__ = [
    "ComparisonReport",
    "PanelSpec",
    "SweepSpec",
    "SweepTable",
    "compare_report",
    "emit_csv",
    "emit_svg",
    "read_csv",
    "run_sweep",
]

from .csv_io import emit_csv, read_csv
from .plots import PanelSpec, emit_svg
from .table import (
    ComparisonReport,
    SweepSpec,
    SweepTable,
    compare_report,
    run_sweep,
)

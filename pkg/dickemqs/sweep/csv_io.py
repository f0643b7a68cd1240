"""
Copyright (c) dickemqs contributors.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

"""
CSV layout::

    # <metadata as YAML, one line per "# " comment>
    g,e_minus,e_minus_per_atom,...
    0,-0.5,-0.5,...

Numbers are written with 17 significant digits so that reading the file back
reproduces every float bit for bit.
"""

import logging
from pathlib import Path

import numpy as np
import yaml

from dickemqs.common.errors import OutputError, SpecificationError
from dickemqs.sweep.table import SweepTable

COMMENT = "# "


def emit_csv(table, path):
    path = Path(path)
    header = yaml.safe_dump(
        table.metadata, sort_keys=True, default_flow_style=False
    )
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            for line in header.splitlines():
                f.write(f"{COMMENT}{line}\n")
            f.write(",".join(table.columns) + "\n")
            if len(table):
                np.savetxt(
                    f, table.rows, fmt="%.17g", delimiter=",", newline="\n"
                )
    except OSError as e:
        raise OutputError(f"Cannot write CSV: {e}", path=path) from e
    logging.info(f"Wrote {len(table)} rows to {path}")
    return path


def read_csv(path):
    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            lines = f.read().splitlines()
    except OSError as e:
        raise OutputError(f"Cannot read CSV: {e}", path=path) from e

    meta_lines = []
    while lines and lines[0].startswith("#"):
        meta_lines.append(lines.pop(0)[len(COMMENT) :])
    if not lines:
        raise SpecificationError(f"{path} has no header row", field="header")
    columns = tuple(lines[0].split(","))
    body = [line for line in lines[1:] if line]

    if body:
        rows = np.loadtxt(body, delimiter=",", dtype=float, ndmin=2)
    else:
        rows = np.empty((0, len(columns)))
    metadata = yaml.safe_load("\n".join(meta_lines)) or {}
    return SweepTable(columns=columns, rows=rows, metadata=metadata)

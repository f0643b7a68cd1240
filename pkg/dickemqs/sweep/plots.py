"""
Copyright (c) dickemqs contributors.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Optional, Tuple

import matplotlib
from matplotlib.backends.backend_svg import FigureCanvasSVG
from matplotlib.figure import Figure

from dickemqs.common.errors import OutputError, SpecificationError

# Fixed id salt and text-as-text keep the SVG bytes reproducible.
SVG_RC = {"svg.hashsalt": "dickemqs", "svg.fonttype": "none"}
INSET_BOUNDS = (0.14, 0.56, 0.38, 0.36)


@dataclass(frozen=True)
class PanelSpec:
    """What to draw: main curves, optional inset curves and labels.

    Columns listed in ``dashed`` are drawn with a dashed line. With
    ``mark_critical`` a vertical marker is drawn at every critical coupling
    found in the table metadata.
    """

    main: Tuple[str, ...]
    inset: Tuple[str, ...] = ()
    dashed: Tuple[str, ...] = ()
    labels: Dict[str, str] = field(default_factory=dict)
    xlabel: str = "g"
    ylabel: str = ""
    inset_ylabel: str = ""
    title: Optional[str] = None
    mark_critical: bool = True

    @classmethod
    def fig1(cls, suffix=""):
        e_minus = f"e_minus{suffix}_per_atom"
        e_plus = f"e_plus{suffix}_per_atom"
        jz = f"jz{suffix}_per_atom"
        return cls(
            main=(e_minus, e_plus),
            inset=(jz,),
            dashed=(e_plus,),
            labels={e_minus: "$E_-/N$", e_plus: "$E_+/N$", jz: "$J_z/N$"},
            ylabel="$E/N$",
            inset_ylabel=r"$\langle J_z\rangle/N$",
        )

    @classmethod
    def fig2(cls, suffix=""):
        gamma = f"gamma{suffix}_per_atom"
        slope = f"dgamma_dg{suffix}_per_atom"
        return cls(
            main=(gamma,),
            inset=(slope,),
            labels={gamma: r"$\gamma/N$", slope: r"$d\gamma/(N\,dg)$"},
            ylabel=r"$\gamma/N$",
            inset_ylabel=r"$d\gamma/(N\,dg)$",
        )

    @classmethod
    def default(cls, table):
        main = tuple(c for c in table.columns if c not in ("g", "n_atoms"))
        return cls(main=main, mark_critical=False)

    @property
    def columns(self):
        return ("g",) + self.main + self.inset


def _draw(ax, table, columns, panel):
    g = table.column("g")
    for name in columns:
        ax.plot(
            g,
            table.column(name),
            linestyle="--" if name in panel.dashed else "-",
            linewidth=1.2,
            label=panel.labels.get(name, name),
        )
    if panel.mark_critical:
        for g_c in table.metadata.get("critical_coupling", {}).values():
            if g[0] <= g_c <= g[-1]:
                ax.axvline(g_c, color="0.6", linestyle=":", linewidth=0.8)


def emit_svg(table, path, panel=None):
    """Render ``table`` as a static SVG line plot.

    Identical tables give byte-identical files.
    """
    panel = panel or PanelSpec.default(table)
    missing = [c for c in panel.columns if c not in table.columns]
    if missing:
        raise SpecificationError(
            f"Table lacks columns {missing} needed for the plot",
            field="columns",
        )
    path = Path(path)

    with matplotlib.rc_context(SVG_RC):
        fig = Figure(figsize=(5, 4), dpi=100)
        FigureCanvasSVG(fig)
        ax = fig.add_subplot()
        _draw(ax, table, panel.main, panel)
        ax.grid(color="0.95", zorder=0)
        ax.set_xlabel(panel.xlabel)
        ax.set_ylabel(panel.ylabel)
        if panel.title:
            ax.set_title(panel.title)
        if len(panel.main) > 1:
            ax.legend(loc="lower left", frameon=False)

        if panel.inset:
            inset = ax.inset_axes(INSET_BOUNDS)
            _draw(inset, table, panel.inset, panel)
            inset.set_ylabel(panel.inset_ylabel, fontsize=7)
            inset.tick_params(labelsize=6)

        fig.tight_layout(pad=1.5)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            fig.savefig(path, format="svg", metadata={"Date": None})
        except OSError as e:
            raise OutputError(f"Cannot write SVG: {e}", path=path) from e
    logging.info(f"Wrote plot to {path}")
    return path

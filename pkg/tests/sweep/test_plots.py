"""
Copyright (c) dickemqs contributors.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

import pytest

from dickemqs.common.errors import OutputError, SpecificationError
from dickemqs.sweep import PanelSpec, SweepSpec, emit_svg, run_sweep


@pytest.fixture(scope="class")
def load_tables(request):
    request.cls.fig1 = run_sweep(
        SweepSpec(
            observables=("e_minus", "e_plus", "jz"),
            g_count=21,
            show_progress=False,
        )
    )
    request.cls.fig2 = run_sweep(
        SweepSpec(
            observables=("gamma", "dgamma_dg"),
            g_count=21,
            show_progress=False,
        )
    )


@pytest.mark.usefixtures("load_tables")
class TestEmitSvg:
    def test_deterministic(self, tmp_path):
        first = emit_svg(self.fig1, tmp_path / "a.svg", PanelSpec.fig1())
        second = emit_svg(self.fig1, tmp_path / "b.svg", PanelSpec.fig1())
        content = first.read_bytes()
        assert content == second.read_bytes()
        assert content.lstrip().startswith(b"<?xml")
        assert b"<svg" in content

    def test_presets(self, tmp_path):
        path = emit_svg(self.fig2, tmp_path / "fig2.svg", PanelSpec.fig2())
        assert path.stat().st_size > 0
        assert PanelSpec.fig1("_rwa").columns == (
            "g",
            "e_minus_rwa_per_atom",
            "e_plus_rwa_per_atom",
            "jz_rwa_per_atom",
        )

    def test_default_panel_draws_every_column(self, tmp_path):
        panel = PanelSpec.default(self.fig1)
        assert panel.main == self.fig1.columns[1:]
        assert emit_svg(self.fig1, tmp_path / "all.svg").exists()

    def test_single_column(self, tmp_path):
        panel = PanelSpec(main=("jz_per_atom",), mark_critical=False)
        assert emit_svg(self.fig1, tmp_path / "jz.svg", panel).exists()

    def test_missing_column(self, tmp_path):
        with pytest.raises(SpecificationError):
            emit_svg(self.fig1, tmp_path / "x.svg", PanelSpec.fig2())
        assert not (tmp_path / "x.svg").exists()

    def test_unwritable_path(self, tmp_path):
        blocker = tmp_path / "file"
        blocker.write_text("")
        with pytest.raises(OutputError):
            emit_svg(self.fig1, blocker / "plot.svg", PanelSpec.fig1())

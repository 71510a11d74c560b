"""Each figure script renders its bundled sample CSV and fails loudly on
corrupted headers."""
from pathlib import Path

import pytest

from qcorr_figures import PanelSpec, PlotSpec, SeriesSpec, plot_scatter
from qcorr_figures.cli import fig1, fig2, fig3, fig4, fig5, fig6

SAMPLES = Path(__file__).resolve().parents[1] / "samples"

SCRIPTS = [
    (fig1, "random_states.csv", "ggm"),
    (fig2, "kicked_top.csv", "discord_smooth"),
    (fig3, "lattice.csv", "discord"),
    (fig4, "lattice.csv", "theta"),
    (fig5, "fully_connected.csv", "case"),
    (fig6, "random_weighted.csv", "ggm"),
]


@pytest.mark.parametrize("script,sample,_", SCRIPTS, ids=[s[1] + "/" + s[0].__name__ for s in SCRIPTS])
def test_renders_sample_to_nonempty_image(script, sample, _, tmp_path):
    out = tmp_path / "figure.png"
    rc = script(["--csv", str(SAMPLES / sample), "--out", str(out)])
    assert rc == 0
    assert out.exists()
    assert out.stat().st_size > 1024


@pytest.mark.parametrize("script,sample,column", SCRIPTS, ids=[s[1] + "/" + s[0].__name__ for s in SCRIPTS])
def test_corrupted_header_names_the_column(script, sample, column, tmp_path, capsys):
    source = (SAMPLES / sample).read_text().splitlines()
    header_index = next(i for i, line in enumerate(source) if not line.startswith("#"))
    source[header_index] = source[header_index].replace(column, f"{column}_gone")
    corrupted = tmp_path / "corrupted.csv"
    corrupted.write_text("\n".join(source) + "\n")
    rc = script(["--csv", str(corrupted), "--out", str(tmp_path / "figure.png")])
    assert rc == 1
    err = capsys.readouterr().err
    assert column in err


def test_single_row_csv_plots_without_crash(tmp_path):
    source = (SAMPLES / "random_weighted.csv").read_text().splitlines()
    kept = [line for line in source if line.startswith("#")]
    data = [line for line in source if not line.startswith("#")]
    single = tmp_path / "single.csv"
    single.write_text("\n".join(kept[:1] + data[:2]) + "\n")
    out = tmp_path / "figure.png"
    assert fig6(["--csv", str(single), "--out", str(out)]) == 0
    assert out.stat().st_size > 1024


def test_missing_input_file(tmp_path, capsys):
    rc = fig6(["--csv", str(tmp_path / "nope.csv"), "--out", str(tmp_path / "o.png")])
    assert rc == 1


def test_normalize_flag(tmp_path):
    out = tmp_path / "figure.png"
    rc = fig3(["--csv", str(SAMPLES / "lattice.csv"), "--out", str(out), "--normalize"])
    assert rc == 0
    assert out.stat().st_size > 1024


def test_plot_scatter_validates_before_drawing(tmp_path):
    from qcorr_figures import MissingColumnError

    spec = PlotSpec(
        csv_path=str(SAMPLES / "random_weighted.csv"),
        out_path=str(tmp_path / "x.png"),
        panels=(PanelSpec(x="ggm", series=(SeriesSpec("not_a_column"),)),),
    )
    with pytest.raises(MissingColumnError):
        plot_scatter(spec)
    assert not (tmp_path / "x.png").exists()

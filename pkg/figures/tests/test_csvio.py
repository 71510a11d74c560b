"""CSV reading for the documented qcorr format."""
import numpy as np
import pytest

from qcorr_figures import MissingColumnError, read_table

SAMPLE = """# qcorr 0.1.0
# seed = 1
kind,n,theta,ggm
lattice,,0.5,0.1
lattice,,1.0,
# pearson_discord_ggm = 0.0
"""


def test_reads_header_and_rows(tmp_path):
    path = tmp_path / "t.csv"
    path.write_text(SAMPLE)
    table = read_table(path)
    assert table.columns == ("kind", "n", "theta", "ggm")
    assert len(table.rows) == 2
    assert table.strings("kind") == ["lattice", "lattice"]


def test_floats_map_empty_to_nan(tmp_path):
    path = tmp_path / "t.csv"
    path.write_text(SAMPLE)
    table = read_table(path)
    values = table.floats("ggm")
    assert values[0] == pytest.approx(0.1)
    assert np.isnan(values[1])


def test_missing_column_is_named(tmp_path):
    path = tmp_path / "t.csv"
    path.write_text(SAMPLE)
    table = read_table(path)
    with pytest.raises(MissingColumnError) as excinfo:
        table.floats("discord")
    assert "discord" in str(excinfo.value)


def test_empty_file_rejected(tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text("# only comments\n")
    with pytest.raises(ValueError):
        read_table(path)

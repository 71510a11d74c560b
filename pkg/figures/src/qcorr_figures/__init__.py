"""Figure rendering for qcorr CSV sweep output.

Nothing here recomputes physics: every plotted number is read from a CSV
column written by the qcorr command-line runners.
"""

__version__ = "0.1.0"

from .csvio import MissingColumnError, Table, read_table
from .plots import PanelSpec, PlotSpec, SeriesSpec, plot_curves, plot_scatter

__all__ = [
    "MissingColumnError",
    "PanelSpec",
    "PlotSpec",
    "SeriesSpec",
    "Table",
    "plot_curves",
    "plot_scatter",
    "read_table",
]

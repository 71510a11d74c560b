"""Scatter and curve rendering from qcorr CSV tables.

The plotting layer never computes physics: every number drawn comes
straight from a CSV column.  Row selection (``where``) and per-series
grouping slice the table by raw string equality on its fields.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .csvio import Table, read_table


@dataclass(frozen=True)
class SeriesSpec:
    """One drawn series: a y column, optional row filter and grouping.

    ``label`` may contain ``{group}``, replaced by the group value; ``style``
    is passed through to matplotlib.
    """

    y: str
    label: str | None = None
    where: tuple[tuple[str, str], ...] = ()
    group: str | None = None
    style: dict = field(default_factory=dict)


@dataclass(frozen=True)
class PanelSpec:
    x: str
    series: tuple[SeriesSpec, ...]
    xlabel: str = ""
    ylabel: str = ""
    title: str = ""


@dataclass(frozen=True)
class PlotSpec:
    """Inputs of one rendered image.

    ``normalize`` rescales every drawn series to unit maximum (used to
    overlay measures with different ranges); ``inset`` draws a smaller
    panel inside the last axes, used to show raw data under a smoothed
    main plot.
    """

    csv_path: str
    out_path: str
    panels: tuple[PanelSpec, ...]
    normalize: bool = False
    inset: PanelSpec | None = None


def referenced_columns(spec: PlotSpec) -> list[str]:
    columns: list[str] = []
    panels = list(spec.panels) + ([spec.inset] if spec.inset else [])
    for panel in panels:
        columns.append(panel.x)
        for series in panel.series:
            columns.append(series.y)
            columns.extend(column for column, _ in series.where)
            if series.group:
                columns.append(series.group)
    return columns


def _validate(spec: PlotSpec, table: Table) -> None:
    table.require(*referenced_columns(spec))
    if not table.rows:
        raise ValueError(f"{table.path}: no data rows")


def _group_values(table: Table, column: str, where) -> list[str]:
    values = {row_value for row_value, keep in zip(table.strings(column), _mask(table, where)) if keep}

    def sort_key(value: str):
        try:
            return (0, float(value), value)
        except ValueError:
            return (1, 0.0, value)

    return sorted(values, key=sort_key)


def _mask(table: Table, where) -> np.ndarray:
    keep = np.ones(len(table.rows), dtype=bool)
    for column, expected in where:
        keep &= np.array([value == expected for value in table.strings(column)])
    return keep


def _draw_series(ax, table: Table, panel: PanelSpec, series: SeriesSpec, normalize: bool, scatter: bool) -> None:
    slices: list[tuple[str | None, tuple[tuple[str, str], ...]]] = []
    if series.group:
        for value in _group_values(table, series.group, series.where):
            slices.append((value, series.where + ((series.group, value),)))
    else:
        slices.append((None, series.where))

    x_all = table.floats(panel.x)
    y_all = table.floats(series.y)
    for group_value, where in slices:
        keep = _mask(table, where)
        x, y = x_all[keep], y_all[keep]
        finite = np.isfinite(x) & np.isfinite(y)
        x, y = x[finite], y[finite]
        if x.size == 0:
            continue
        if normalize and float(np.max(np.abs(y))) > 0.0:
            y = y / float(np.max(np.abs(y)))
        label = series.label or series.y
        if group_value is not None:
            label = label.format(group=group_value) if "{group}" in label else f"{label} {group_value}"
        if scatter:
            ax.scatter(x, y, s=4, label=label, **series.style)
        else:
            order = np.argsort(x, kind="stable")
            ax.plot(x[order], y[order], label=label, **series.style)


def _render(spec: PlotSpec, scatter: bool) -> Path:
    table = read_table(spec.csv_path)
    _validate(spec, table)
    n_panels = len(spec.panels)
    fig, axes = plt.subplots(
        n_panels, 1, figsize=(6.0, 3.4 * n_panels), squeeze=False, constrained_layout=True
    )
    for ax, panel in zip(axes[:, 0], spec.panels):
        for series in panel.series:
            _draw_series(ax, table, panel, series, spec.normalize, scatter)
        ax.set_xlabel(panel.xlabel or panel.x)
        ax.set_ylabel(panel.ylabel)
        if panel.title:
            ax.set_title(panel.title)
        if any(s.label or s.group for s in panel.series):
            ax.legend(fontsize=7, ncols=2)
    if spec.inset is not None:
        host = axes[-1, 0]
        inset_ax = host.inset_axes([0.58, 0.58, 0.4, 0.4])
        for series in spec.inset.series:
            _draw_series(inset_ax, table, spec.inset, series, spec.normalize, scatter)
        inset_ax.tick_params(labelsize=6)
    out = Path(spec.out_path)
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out


def plot_scatter(spec: PlotSpec) -> Path:
    """Render scatter panels; raises MissingColumnError for unknown columns."""
    return _render(spec, scatter=True)


def plot_curves(spec: PlotSpec) -> Path:
    """Render line panels (per-group curves); same validation as scatter."""
    return _render(spec, scatter=False)

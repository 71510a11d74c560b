"""Reading of the documented qcorr CSV format.

Files carry a '#'-prefixed metadata preamble (and possibly '#' footer
lines), then a header row and comma-separated data rows in which fields
that do not apply to an experiment are empty strings.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np


class MissingColumnError(KeyError):
    """A referenced column is absent from the CSV header."""

    def __init__(self, column: str):
        self.column = column
        super().__init__(column)

    def __str__(self) -> str:
        return f"column {self.column!r} not found in CSV header"


@dataclass(frozen=True)
class Table:
    path: str
    columns: tuple[str, ...]
    rows: list[list[str]]

    def _index(self, name: str) -> int:
        try:
            return self.columns.index(name)
        except ValueError as exc:
            raise MissingColumnError(name) from exc

    def require(self, *names: str) -> None:
        for name in names:
            self._index(name)

    def strings(self, name: str) -> list[str]:
        i = self._index(name)
        return [row[i] for row in self.rows]

    def floats(self, name: str) -> np.ndarray:
        """Column as floats with empty fields mapped to NaN."""
        i = self._index(name)
        return np.array([float(row[i]) if row[i] != "" else np.nan for row in self.rows])


def read_table(path: str | Path) -> Table:
    path = Path(path)
    data_lines = [
        line for line in path.read_text().splitlines() if line and not line.startswith("#")
    ]
    if not data_lines:
        raise ValueError(f"{path}: no header row found")
    parsed = list(csv.reader(data_lines))
    header = tuple(parsed[0])
    rows = [row for row in parsed[1:] if row]
    return Table(path=str(path), columns=header, rows=rows)

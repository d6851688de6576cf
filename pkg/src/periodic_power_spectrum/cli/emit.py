"""
Encoders for command output.

Every command produces a ``Table``: an ordered column list and rows of plain
numbers. CSV and TSV go through pandas; JSON wraps the same rounded values in
a ``{"meta": ..., "data": [...]}`` document.
"""

import json
from dataclasses import dataclass, field
from typing import Any

import pandas as pd

from periodic_power_spectrum.cli.config import OutputFormat
from periodic_power_spectrum.exceptions import InvalidParameterError

type Cell = int | float | str
type Row = dict[str, Cell]

DECIMALS_FORMAT = ".4f"
SIGNAL_FORMAT = ".12g"


@dataclass
class Table:
    """
    Rows of one command run.

    Attributes:
        columns: Column names in output order, without ``id``
        rows: Row mappings; each carries an ``id`` entry naming its record
        float_format: Format spec applied to every float cell
    """

    columns: tuple[str, ...]
    rows: list[Row] = field(default_factory=list)
    float_format: str = DECIMALS_FORMAT

    def add(self, record_id: str, **values: Cell) -> None:
        self.rows.append({"id": record_id, **values})


def _round(value: Cell, spec: str) -> Cell:
    if isinstance(value, float):
        return float(format(value, spec))
    return value


def _text(value: Cell, spec: str) -> str:
    if isinstance(value, float):
        return format(value, spec)
    return str(value)


def to_delimited(table: Table, sep: str, *, with_id: bool) -> str:
    columns = ["id", *table.columns] if with_id else list(table.columns)
    frame = pd.DataFrame(
        [[_text(row[name], table.float_format) for name in columns] for row in table.rows],
        columns=columns,
        dtype=object,
    )
    return frame.to_csv(index=False, sep=sep, lineterminator="\n")


def to_json(table: Table, meta: dict[str, Any]) -> str:
    data = [
        {
            "id": row["id"],
            **{name: _round(row[name], table.float_format) for name in table.columns},
        }
        for row in table.rows
    ]
    return json.dumps({"meta": meta, "data": data}, indent=2) + "\n"


def encode(
    table: Table,
    output_format: OutputFormat,
    meta: dict[str, Any],
) -> str:
    """
    Render a table in the requested format.

    CSV and TSV rows lead with an ``id`` column only when the run covered more
    than one record; JSON rows always carry ``id``.

    Raises:
        InvalidParameterError: If the format is unknown
    """
    with_id = len(meta.get("sequences", ())) > 1
    match output_format:
        case "csv":
            return to_delimited(table, ",", with_id=with_id)
        case "tsv":
            return to_delimited(table, "\t", with_id=with_id)
        case "json":
            return to_json(table, meta)
        case _:
            msg = f"unknown output format '{output_format}'"
            raise InvalidParameterError(msg)

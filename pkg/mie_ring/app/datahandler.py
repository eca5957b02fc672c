"""
Copyright 2026 The mie_ring Authors

Licensed under the MIT License. See the LICENSE file in the project root.
"""

import csv
import io
import json
import logging
import math
import os
import sys
from typing import Any, Optional, Union

from .config import OUTPUT_FORMAT

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "{:.12g}"
ENERGY_FORMAT = "{:.12f}"


def formatValue(value: Any, floatFormat: str = FLOAT_FORMAT) -> str:
    """Text of one cell.

    Floats get 12 significant digits unless another format is given, None becomes an empty
    cell and booleans are written as true and false.
    """
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        return floatFormat.format(value)
    return str(value)


def _jsonValue(value: Any, floatFormat: str = FLOAT_FORMAT) -> Any:
    """The JSON counterpart of a cell, rounded exactly like the CSV text."""
    if isinstance(value, float) and not isinstance(value, bool):
        if not math.isfinite(value):
            return None
        return float(floatFormat.format(value))
    return value


def shiftedEnergy(binding: float, c: float) -> float:
    """Energy c - binding with the binding rounded to the decimals of ENERGY_FORMAT.

    Written with ENERGY_FORMAT, the energies of two potentials that differ only in c differ by
    exactly the difference of their c values, as long as c has no more decimals than the format.

    :param binding: Binding energy c - E.
    :param c: Constant shift of the potential.
    :returns: The energy to write.
    """
    return c + float(ENERGY_FORMAT.format(-binding))


class DataManager:
    """
    Collects records with a fixed column order and writes them as CSV or JSON.

    Rows are written in the order they were added, so identical runs give byte-identical files.

    :param columns: Column names, the keys of the records.
    :param formats: Float formats by column, other columns use FLOAT_FORMAT.
    """

    def __init__(self, columns: list[str], formats: Optional[dict[str, str]] = None):
        self._columns = list(columns)
        self._formats = dict(formats or {})
        self._rows: list[dict[str, Any]] = []
        return

    @property
    def columns(self) -> list[str]:
        return list(self._columns)

    @property
    def rows(self) -> list[dict[str, Any]]:
        return list(self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    def _formatOf(self, column: str) -> str:
        return self._formats.get(column, FLOAT_FORMAT)

    def addRecord(self, record: dict[str, Any]) -> None:
        """Append a record.

        :param record: Values by column. Missing columns are written as empty cells.
        :raises KeyError: For keys that are not columns.
        """
        unknown = set(record) - set(self._columns)
        if unknown:
            raise KeyError(f"record has unknown columns {sorted(unknown)}")
        self._rows.append({column: record.get(column) for column in self._columns})
        return

    def extend(self, records: list[dict[str, Any]]) -> None:
        for record in records:
            self.addRecord(record)
        return

    def toCsv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self._columns)
        for row in self._rows:
            writer.writerow([formatValue(row[column], self._formatOf(column)) for column in self._columns])
        return buffer.getvalue()

    def toJson(self) -> str:
        """JSON array of objects whose keys mirror the CSV columns."""
        records = [
            {column: _jsonValue(row[column], self._formatOf(column)) for column in self._columns}
            for row in self._rows
        ]
        return json.dumps(records, indent=2) + "\n"

    def toText(self, outputFormat: Union[str, OUTPUT_FORMAT]) -> str:
        if OUTPUT_FORMAT.fromString(outputFormat) is OUTPUT_FORMAT.JSON:
            return self.toJson()
        return self.toCsv()

    def saveDataAsText(
        self, filename: Optional[str], outputFormat: Union[str, OUTPUT_FORMAT] = OUTPUT_FORMAT.CSV
    ) -> None:
        """Save the records.

        Comma separated columns with "." as decimal separator and a header row, or a JSON array.

        :param filename: Path of the file, None writes to standard output.
        :param outputFormat: csv or json.
        """
        text = self.toText(outputFormat)
        if filename is None:
            sys.stdout.write(text)
            sys.stdout.flush()
            return
        directory = os.path.dirname(filename)
        if directory != "":
            os.makedirs(directory, exist_ok=True)
        with open(filename, "wb") as file:
            file.write(text.encode("utf-8"))
        logger.info("%d records written to %s", len(self._rows), filename)
        return

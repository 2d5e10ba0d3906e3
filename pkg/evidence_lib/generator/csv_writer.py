"""
Deterministic CSV output for tables, surfaces and split listings.

Header row unquoted, label fields always quoted (subsets are comma-joined),
numbers unquoted with a fixed number of decimals. Line endings are "\n"
on every platform so reruns are byte-identical.
"""

import csv
import io
from decimal import Decimal
from pathlib import Path
from typing import IO, Any, Iterable, Sequence, Union

FULL_PRECISION = 17


def format_number(value: float, precision: int) -> Decimal:
    """``value`` rounded to ``precision`` decimals; ``FULL_PRECISION`` keeps repr digits."""
    value = float(value) + 0.0  # -0.0 -> 0.0
    if precision >= FULL_PRECISION:
        return Decimal(repr(value))
    return Decimal(f"{value:.{precision}f}")


class CsvTableWriter:
    """Writes one CSV table to a text stream."""

    def __init__(self, stream: IO[str], header: Sequence[str], precision: int = 4):
        self.stream = stream
        self.header = list(header)
        self.precision = precision
        self._body = csv.writer(stream, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
        csv.writer(stream, quoting=csv.QUOTE_MINIMAL, lineterminator="\n").writerow(self.header)

    def _cell(self, value: Any) -> Any:
        if isinstance(value, bool):
            return int(value)
        if isinstance(value, int):
            return value
        if isinstance(value, float):
            return format_number(value, self.precision)
        return str(value)

    def write_row(self, row: Sequence[Any]) -> None:
        if len(row) != len(self.header):
            raise ValueError(f"Row has {len(row)} fields, header has {len(self.header)}")
        self._body.writerow([self._cell(v) for v in row])

    def write_rows(self, rows: Iterable[Sequence[Any]]) -> None:
        for row in rows:
            self.write_row(row)


def table_to_text(header: Sequence[str], rows: Iterable[Sequence[Any]], precision: int = 4) -> str:
    """Render a whole table to a string."""
    buffer = io.StringIO()
    CsvTableWriter(buffer, header, precision).write_rows(rows)
    return buffer.getvalue()


def write_table(
    file_path: Union[str, Path],
    header: Sequence[str],
    rows: Iterable[Sequence[Any]],
    precision: int = 4,
) -> Path:
    file_path = Path(file_path)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    # newline="" keeps the "\n" terminator untranslated
    with open(file_path, "w", encoding="utf-8", newline="") as f:
        CsvTableWriter(f, header, precision).write_rows(rows)
    return file_path

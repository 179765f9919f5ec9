"""Read one numeric column from CSV or JSON-lines files."""

import csv
import json
import logging
import math
from pathlib import Path

from logentropy.errors import DataError

__all__ = ["ingest", "detect_format"]

log = logging.getLogger(__name__)

JSONL_SUFFIXES = (".jsonl", ".ndjson")


def detect_format(path):
    return "jsonl" if Path(path).suffix.lower() in JSONL_SUFFIXES else "csv"


def _number(text):
    if isinstance(text, bool):
        raise ValueError("boolean is not a number")
    value = float(text)
    if not math.isfinite(value):
        raise ValueError("non-finite")
    return value


def _read_csv(lines, column):
    rows = [(i, row) for i, row in enumerate(csv.reader(lines), start=1) if row and any(c.strip() for c in row)]
    if not rows:
        return []
    first_line, header = rows[0]
    index = None
    if column is not None and not str(column).lstrip("-").isdigit():
        names = [h.strip() for h in header]
        if column not in names:
            raise DataError(f"column {column!r} not found in header {names}")
        index = names.index(column)
        rows = rows[1:]
    else:
        index = int(column) if column is not None else 0
        try:
            _number(header[index].strip())
        except (ValueError, IndexError):
            rows = rows[1:]  # header present
    out = []
    for lineno, row in rows:
        try:
            out.append((lineno, row[index].strip()))
        except IndexError:
            out.append((lineno, None))
    return out


def _read_jsonl(lines, column):
    out = []
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError:
            out.append((lineno, None))
            continue
        if isinstance(obj, dict):
            if column is None:
                raise DataError(f"line {lineno}: JSON objects need a field name (--column)")
            obj = obj.get(column)
        out.append((lineno, obj))
    return out


def ingest(path, column=None, lenient=False, fmt=None):
    """Parse the selected column of ``path`` into floats, in file order.

    CSV: header optional; ``column`` is a header name or a 0-based index
    (default 0). JSONL: one number, or one object per line with field
    ``column``. Strict mode fails on the first unparsable row, naming its
    line; ``lenient`` skips such rows and logs how many were dropped.
    """
    path = Path(path)
    if not path.is_file():
        raise DataError(f"no such file: {path}")
    fmt = fmt or detect_format(path)
    with path.open(newline="", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    cells = _read_jsonl(lines, column) if fmt == "jsonl" else _read_csv(lines, column)

    values, bad = [], []
    for lineno, cell in cells:
        try:
            values.append(_number(cell))
        except (TypeError, ValueError):
            bad.append(lineno)
    if bad and not lenient:
        shown = ", ".join(map(str, bad[:10]))
        raise DataError(f"{len(bad)} non-numeric row(s) at line(s) {shown}")
    if bad:
        log.warning("skipped %d non-numeric row(s)", len(bad))
    if not values:
        raise DataError("no data")
    return values

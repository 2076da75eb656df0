"""Locale-independent CSV emission with lossless float formatting.

Floats are written as the shortest decimal string that parses back to the same
double (at most 17 significant digits), so parse -> re-emit is byte-identical.
"""
from __future__ import annotations

import csv
import io
import math

def format_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    value = float(value)
    if not math.isfinite(value):
        return ""
    return repr(value)


def parse_value(text: str):
    return None if text == "" else float(text)


def dumps(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_value(v) for v in row])
    return buf.getvalue()


def loads(text: str):
    """Parse CSV text into ``(header, rows)`` with floats or ``None`` for empty cells."""
    reader = csv.reader(io.StringIO(text, newline=""))
    header = next(reader)
    return header, [[parse_value(cell) for cell in row] for row in reader]


def write(path, header, rows) -> str:
    text = dumps(header, rows)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    return text

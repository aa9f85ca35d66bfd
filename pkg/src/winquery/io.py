"""Event ingestion from CSV and JSON-lines files.

CSV: header row `t,x,y[,z...][,color]`; timestamps are integers, coordinates
decimal reals, the optional color column a 32-bit unsigned integer.
JSON-lines: one object per line with keys `t`, `coords`, optional `color`.
Parse failures name the offending line.
"""

from __future__ import annotations

import csv
import json

from .errors import UsageError
from .events import EventSequence, make_sequence


class ParseError(UsageError):
    """Malformed input row; message carries the 1-based line number."""


def load_csv(path: str) -> EventSequence:
    raw = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ParseError(f"{path}: empty file") from None
        header = [h.strip().lower() for h in header]
        if not header or header[0] != "t":
            raise ParseError(f"{path}:1: header must start with 't', got {header!r}")
        has_color = header[-1] == "color"
        ncoords = len(header) - 1 - (1 if has_color else 0)
        if ncoords < 1:
            raise ParseError(f"{path}:1: header declares no coordinate columns")
        for lineno, row in enumerate(reader, start=2):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if len(row) != len(header):
                raise ParseError(
                    f"{path}:{lineno}: expected {len(header)} fields, got {len(row)}"
                )
            try:
                t = int(row[0])
                coords = tuple(float(v) for v in row[1 : 1 + ncoords])
                color = int(row[-1]) if has_color else None
            except ValueError as exc:
                raise ParseError(f"{path}:{lineno}: {exc}") from None
            raw.append((t, coords, color))
    if not raw:
        raise ParseError(f"{path}: no event rows")
    return make_sequence(raw)


def load_jsonl(path: str) -> EventSequence:
    raw = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
                t = int(obj["t"])
                coords = tuple(float(v) for v in obj["coords"])
                color = obj.get("color")
            except (ValueError, KeyError, TypeError) as exc:
                raise ParseError(f"{path}:{lineno}: {exc}") from None
            raw.append((t, coords, color))
    if not raw:
        raise ParseError(f"{path}: no event rows")
    return make_sequence(raw)


def load_events(path: str) -> EventSequence:
    """Dispatch on extension: .csv -> CSV, .jsonl/.ndjson/.json -> JSON lines."""
    lower = path.lower()
    if lower.endswith(".csv"):
        return load_csv(path)
    if lower.endswith((".jsonl", ".ndjson", ".json")):
        return load_jsonl(path)
    raise UsageError(f"unrecognized input format: {path} (want .csv or .jsonl)")

"""Date-aligned multivariate series and ``date,value`` CSV ingestion."""

from __future__ import annotations

import csv
import logging
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import InputError

log = logging.getLogger(__name__)

KINDS = ("prices", "log_returns")


@dataclass(eq=False)
class SeriesFrame:
    """Named real-valued columns over strictly increasing dates.

    Attributes
    ----------
    dates : ndarray of datetime64[D]
    columns : dict mapping column name to a float array of the same length
    kind : ``"prices"`` or ``"log_returns"``
    frequency : free-form label; no calendar arithmetic is done with it
    meta : provenance notes (source files, dropped-row counts, ...)
    """

    dates: np.ndarray
    columns: dict
    kind: str = "prices"
    frequency: str = "weekly"
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.dates = np.asarray(self.dates, dtype="datetime64[D]")
        self.columns = {k: np.asarray(v, dtype=float) for k, v in self.columns.items()}
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        n = self.dates.shape[0]
        for name, col in self.columns.items():
            if col.shape != (n,):
                raise ValueError(f"column {name!r} has shape {col.shape}, expected ({n},)")
            if not np.all(np.isfinite(col)):
                raise InputError(f"column {name!r} contains missing or non-finite values")
            if self.kind == "prices" and np.any(col <= 0):
                raise InputError(f"column {name!r} contains nonpositive prices")
        if n > 1 and np.any(np.diff(self.dates).astype(int) <= 0):
            raise ValueError("dates must be strictly increasing")

    @property
    def names(self) -> list:
        return list(self.columns)

    def __len__(self):
        return self.dates.shape[0]

    @property
    def values(self) -> np.ndarray:
        """``(n_rows, n_columns)`` array in column order."""
        return np.column_stack([self.columns[k] for k in self.names]) if self.columns else np.empty((len(self), 0))

    def take(self, rows) -> "SeriesFrame":
        """Subset of rows (slice, index array or boolean mask)."""
        return SeriesFrame(
            self.dates[rows],
            {k: v[rows] for k, v in self.columns.items()},
            self.kind,
            self.frequency,
            dict(self.meta),
        )

    def select(self, names) -> "SeriesFrame":
        return SeriesFrame(self.dates, {k: self.columns[k] for k in names}, self.kind, self.frequency, dict(self.meta))


def _parse_float(text, path, lineno):
    try:
        value = float(text)
    except ValueError:
        raise InputError(f"{path}:{lineno}: cannot parse value {text!r}") from None
    if not math.isfinite(value):
        raise InputError(f"{path}:{lineno}: non-finite value {text!r}")
    return value


def read_series_csv(path, positive: bool = True):
    """Read one ``date,value`` file; returns (dates, values) sorted by date."""
    path = Path(path)
    dates, values = [], []
    with path.open(newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip().lower() for h in header] != ["date", "value"]:
            raise InputError(f"{path}:1: expected header 'date,value', got {header!r}")
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) != 2:
                raise InputError(f"{path}:{lineno}: expected 2 fields, got {len(row)}")
            try:
                d = np.datetime64(row[0].strip(), "D")
            except ValueError:
                raise InputError(f"{path}:{lineno}: cannot parse date {row[0]!r}") from None
            v = _parse_float(row[1].strip(), path, lineno)
            if positive and v <= 0:
                raise InputError(f"{path}:{lineno}: nonpositive price {v}")
            dates.append(d)
            values.append(v)
    if not dates:
        raise InputError(f"{path}: no data rows")
    dates = np.array(dates, dtype="datetime64[D]")
    values = np.array(values)
    order = np.argsort(dates, kind="stable")
    if np.any(np.diff(order) < 0):
        log.warning("%s: input not sorted by date; sorting", path)
    dates, values = dates[order], values[order]
    dup = dates[1:][dates[1:] == dates[:-1]]
    if dup.size:
        raise InputError(f"{path}: duplicate date {dup[0]}")
    return dates, values


def ingest(paths, names=None, kind: str = "prices", frequency: str = "weekly") -> SeriesFrame:
    """Load one or more ``date,value`` files and inner-join them on date.

    Parameters
    ----------
    paths : path or sequence of paths
    names : column names (defaults to the file stems)
    """
    if isinstance(paths, (str, Path)):
        paths = [paths]
    paths = [Path(p) for p in paths]
    names = list(names) if names is not None else [p.stem for p in paths]
    if len(names) != len(paths):
        raise ValueError("need one column name per input file")
    loaded = [read_series_csv(p, positive=(kind == "prices")) for p in paths]
    common = loaded[0][0]
    for d, _ in loaded[1:]:
        common = np.intersect1d(common, d)
    if common.size == 0:
        raise InputError("input files share no dates")
    columns = {}
    dropped = {}
    for name, (d, v) in zip(names, loaded):
        keep = np.isin(d, common)
        dropped[name] = int((~keep).sum())
        columns[name] = v[keep]
        if dropped[name]:
            log.info("%s: dropped %d non-overlapping dates", name, dropped[name])
    meta = {"sources": [str(p) for p in paths], "dropped_rows": dropped}
    return SeriesFrame(common, columns, kind, frequency, meta)


def log_returns(frame: SeriesFrame) -> SeriesFrame:
    """``r(t) = log(P(t) / P(t-1))``; the first date is dropped."""
    if frame.kind != "prices":
        raise ValueError("log_returns needs a price frame")
    if len(frame) < 2:
        raise InputError("need at least two prices")
    cols = {}
    for k, v in frame.columns.items():
        if np.any(v <= 0):
            raise InputError(f"column {k!r} contains nonpositive prices")
        cols[k] = np.diff(np.log(v))
    meta = dict(frame.meta)
    meta["base_prices"] = {k: float(v[0]) for k, v in frame.columns.items()}
    return SeriesFrame(frame.dates[1:], cols, "log_returns", frame.frequency, meta)


def write_frame_csv(frame: SeriesFrame, path, fmt: str = "%.10g"):
    """Write ``date,<col1>,<col2>...`` with one row per date."""
    path = Path(path)
    with path.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["date", *frame.names])
        vals = frame.values
        for d, row in zip(frame.dates, vals):
            w.writerow([str(d), *(fmt % v for v in row)])


def read_frame_csv(path, kind: str = "log_returns", frequency: str = "weekly") -> SeriesFrame:
    """Inverse of :func:`write_frame_csv`."""
    path = Path(path)
    with path.open(newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if not header or header[0].strip().lower() != "date":
            raise InputError(f"{path}:1: expected a 'date' first column")
        names = [h.strip() for h in header[1:]]
        dates, rows = [], []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(header):
                raise InputError(f"{path}:{lineno}: expected {len(header)} fields, got {len(row)}")
            try:
                dates.append(np.datetime64(row[0].strip(), "D"))
            except ValueError:
                raise InputError(f"{path}:{lineno}: cannot parse date {row[0]!r}") from None
            rows.append([_parse_float(c.strip(), path, lineno) for c in row[1:]])
    vals = np.array(rows, dtype=float).reshape(len(rows), len(names))
    return SeriesFrame(np.array(dates, dtype="datetime64[D]"), {n: vals[:, i] for i, n in enumerate(names)}, kind, frequency)


def write_series_csv(dates, values, path, fmt: str = "%.10g"):
    """Write a single ``date,value`` file."""
    with Path(path).open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["date", "value"])
        for d, v in zip(np.asarray(dates, dtype="datetime64[D]"), values):
            w.writerow([str(d), fmt % v])

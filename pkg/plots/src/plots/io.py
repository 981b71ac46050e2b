"""Reading sweep output directories: aggregates.csv, records.csv, manifest.json.

This package consumes only the documented CSV/JSON schema written by the
simulator; it has no code dependency on it.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

AGGREGATE_COLUMNS = ["p", "observable", "region", "mean", "variance", "stderr", "n"]
RECORD_COLUMNS = ["p", "sample", "observable", "region", "value"]


class SchemaError(ValueError):
    """Input file does not match the documented sweep schema."""


@dataclass(frozen=True)
class AggregateRow:
    p: float
    observable: str
    region: str
    mean: float
    variance: float
    stderr: float
    n: int


@dataclass(frozen=True)
class RecordRow:
    p: float
    sample: int
    observable: str
    region: str
    value: float


def _check_columns(path: Path, have, want: list[str]) -> None:
    missing = [c for c in want if c not in (have or [])]
    if missing:
        raise SchemaError(f"{path}: missing column {missing[0]!r}")


def read_aggregates(path: str | Path) -> list[AggregateRow]:
    path = Path(path)
    with path.open(newline="") as f:
        reader = csv.DictReader(f)
        _check_columns(path, reader.fieldnames, AGGREGATE_COLUMNS)
        return [
            AggregateRow(
                float(r["p"]), r["observable"], r["region"],
                float(r["mean"]), float(r["variance"]), float(r["stderr"]),
                int(r["n"]),
            )
            for r in reader
        ]


def read_records(path: str | Path) -> list[RecordRow]:
    path = Path(path)
    with path.open(newline="") as f:
        reader = csv.DictReader(f)
        _check_columns(path, reader.fieldnames, RECORD_COLUMNS)
        return [
            RecordRow(
                float(r["p"]), int(r["sample"]), r["observable"],
                r["region"], float(r["value"]),
            )
            for r in reader
        ]


@dataclass
class SweepDir:
    """A completed sweep output directory."""

    aggregates: list[AggregateRow]
    records: list[RecordRow]
    manifest: dict

    @property
    def n_vertices(self) -> int | None:
        cfg = (self.manifest or {}).get("config") or {}
        if "L_x" in cfg and "L_y" in cfg:
            return 2 * cfg["L_x"] * cfg["L_y"]
        return None

    def curve(self, observable: str, region: str) -> list[AggregateRow]:
        rows = [
            a for a in self.aggregates
            if a.observable == observable and a.region == region
        ]
        return sorted(rows, key=lambda a: a.p)

    def regions(self, observable: str) -> list[str]:
        seen: list[str] = []
        for a in self.aggregates:
            if a.observable == observable and a.region not in seen:
                seen.append(a.region)
        return seen


def read_sweep_dir(path: str | Path) -> SweepDir:
    path = Path(path)
    agg_path = path / "aggregates.csv"
    if not agg_path.exists():
        raise SchemaError(f"{path}: no aggregates.csv found")
    aggregates = read_aggregates(agg_path)
    rec_path = path / "records.csv"
    records = read_records(rec_path) if rec_path.exists() else []
    man_path = path / "manifest.json"
    manifest = json.loads(man_path.read_text()) if man_path.exists() else {}
    return SweepDir(aggregates, records, manifest)

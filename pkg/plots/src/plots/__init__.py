"""Figure rendering for color-code decoherence sweep outputs.

Reads the documented ``aggregates.csv`` / ``records.csv`` /
``manifest.json`` schema and renders the TEN, negativity, purity and
shape-stability figures as static images.
"""

from .figures import FigureSpec, render
from .io import (
    AggregateRow,
    RecordRow,
    SchemaError,
    SweepDir,
    read_aggregates,
    read_records,
    read_sweep_dir,
)

__all__ = [
    "AggregateRow",
    "FigureSpec",
    "RecordRow",
    "SchemaError",
    "SweepDir",
    "read_aggregates",
    "read_records",
    "read_sweep_dir",
    "render",
]

__version__ = "0.1.0"

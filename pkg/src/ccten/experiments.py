"""Monte-Carlo sweeps over the channel strength and the dense oracle.

``run_sweep`` samples stochastic trajectories of the red-link channel on
fresh color-code states, evaluates negativities, TEN and logarithmic
purity, and aggregates means and variances per p.  The hot path packs
the Z-type generators into a numpy bit table: dephasing by XX on a link
is a column test plus row XORs, and a negativity is the GF(2) rank of a
small boundary-straddler overlap matrix.  ``dense_negativity_oracle``
independently recomputes negativity from the 2^n-dimensional density
matrix for small systems.
"""

from __future__ import annotations

import csv
import json
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .f2core import rank_of_ints
from .lattice import (
    COLOR_BY_NAME,
    HoneycombTorus,
    Region,
    TenComplex,
    build_honeycomb_torus,
    logical_loops,
    named_region,
    ten_complex,
)
from .negativity import negativity as negativity_exact
from .pauli import PauliWord, StabilizerState, color_code_state

__version__ = "0.1.0"


# ---------------------------------------------------------------------
# Configuration and results
# ---------------------------------------------------------------------


@dataclass
class SweepConfig:
    """Everything a sweep needs; equal configs give identical outputs."""

    L_x: int
    L_y: int
    p_grid: list[float]
    n_samples: int
    seed: int
    complexes: list[str] = field(default_factory=lambda: ["ten-7"])
    regions: list[str] = field(default_factory=list)
    threads: int = 1
    out: str | None = None

    def __post_init__(self):
        if self.n_samples < 1:
            raise ValueError("n_samples must be >= 1")
        if sorted(self.p_grid) != list(self.p_grid):
            raise ValueError("p_grid must be sorted")
        for p in self.p_grid:
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"p = {p} outside [0, 1]")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")

    def to_dict(self) -> dict:
        return {
            "L_x": self.L_x,
            "L_y": self.L_y,
            "p_grid": list(self.p_grid),
            "n_samples": self.n_samples,
            "seed": self.seed,
            "complexes": list(self.complexes),
            "regions": list(self.regions),
            "threads": self.threads,
            "out": self.out,
        }


@dataclass(frozen=True)
class SweepRecord:
    p: float
    sample: int
    observable: str  # "negativity" | "ten" | "S_e"
    region: str
    value: Fraction


@dataclass(frozen=True)
class AggregateRow:
    p: float
    observable: str
    region: str
    mean: Fraction
    variance: Fraction
    stderr: float
    n: int


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & 0xFFFFFFFFFFFFFFFF
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & 0xFFFFFFFFFFFFFFFF
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & 0xFFFFFFFFFFFFFFFF
    return z ^ (z >> 31)


def derive_seed(base: int, p_index: int, sample: int) -> int:
    """Per-trajectory seed: deterministic, collision-resistant mixing."""
    return _splitmix64(_splitmix64(base ^ (p_index * 0x100000001B3)) ^ sample)


# ---------------------------------------------------------------------
# Packed trajectory engine
# ---------------------------------------------------------------------


def _pauli_rows(words: Iterable[PauliWord], n: int, part: str) -> np.ndarray:
    rows = []
    for w in words:
        bits = w.x if part == "x" else w.z
        rows.append([(bits >> v) & 1 for v in range(n)])
    return np.array(rows, dtype=np.uint8).reshape(len(rows), n)


class _RegionPack:
    """Precomputed per-region data: member columns and X straddlers."""

    def __init__(self, region: Region, x_rows: np.ndarray, x_rows_p1: np.ndarray):
        self.cols = np.fromiter(sorted(region.vertices), dtype=np.intp)
        self.x_sub = self._straddler_sub(x_rows)
        self.x_sub_p1 = self._straddler_sub(x_rows_p1)

    def _straddler_sub(self, x_rows: np.ndarray) -> np.ndarray:
        inside = x_rows[:, self.cols].sum(axis=1)
        total = x_rows.sum(axis=1)
        sel = (inside > 0) & (inside < total)
        return x_rows[np.flatnonzero(sel)][:, self.cols]


class _TrajState:
    """Alive Z rows (uint8) after a trajectory, plus their weights."""

    __slots__ = ("z_sub", "tot", "maximal")

    def __init__(self, z_sub: np.ndarray, maximal: bool):
        self.z_sub = z_sub
        self.tot = z_sub.sum(axis=1)
        self.maximal = maximal


class TrajectoryEngine:
    """Sweep hot path on one torus.

    The fresh code's X-plaquette generators never change under the
    channel (only Z-type generators anticommute with XX), so they are
    packed once; a trajectory evolves only the Z bit table.  At p = 1
    the fixed point additionally stabilizes the two red-sublattice X
    loops, which are packed separately and switched in for that case.
    """

    def __init__(self, t: HoneycombTorus):
        self.t = t
        n = t.n_vertices
        fresh = color_code_state(t)
        x_words = [g for g in fresh.generators if g.z == 0]
        z_words = [g for g in fresh.generators if g.x == 0]
        self.x_rows = _pauli_rows(x_words, n, "x")
        loops = logical_loops(t)
        self.x_rows_p1 = np.vstack(
            [self.x_rows, _pauli_rows([loops.x[1], loops.x[3]], n, "x")]
        )
        self.z_init = _pauli_rows(z_words, n, "z").astype(bool)
        self.link_pairs = [(t.links[l].v1, t.links[l].v2) for l in t.red_links]

    def pack_region(self, region: Region) -> _RegionPack:
        return _RegionPack(region, self.x_rows, self.x_rows_p1)

    def sample(self, p: float, seed: int) -> _TrajState:
        z = self.z_init.copy()
        alive = np.ones(len(z), dtype=bool)
        rng = random.Random(seed)
        for v1, v2 in self.link_pairs:
            if rng.random() >= p:
                continue
            hits = np.flatnonzero((z[:, v1] ^ z[:, v2]) & alive)
            if hits.size == 0:
                continue
            first = hits[0]
            if hits.size > 1:
                z[hits[1:]] ^= z[first]
            alive[first] = False
        return _TrajState(z[alive].astype(np.uint8), p == 1.0)

    def log_purity(self, st: _TrajState) -> int:
        n_x = len(self.x_rows_p1) if st.maximal else len(self.x_rows)
        return self.t.n_vertices - n_x - len(st.z_sub)

    def negativity(self, st: _TrajState, pack: _RegionPack) -> int:
        inside = st.z_sub[:, pack.cols].sum(axis=1)
        sel = np.flatnonzero((inside > 0) & (inside < st.tot))
        z_sub = st.z_sub[sel][:, pack.cols]
        x_sub = pack.x_sub_p1 if st.maximal else pack.x_sub
        if len(z_sub) == 0 or len(x_sub) == 0:
            return 0
        overlap = (x_sub @ z_sub.T) & 1
        packed = np.packbits(overlap, axis=1, bitorder="little")
        return rank_of_ints(
            int.from_bytes(row.tobytes(), "little") for row in packed
        )

    def ten(self, st: _TrajState, packs: dict[str, _RegionPack]) -> int:
        n = lambda key: self.negativity(st, packs[key])  # noqa: E731
        return (
            -n("a") - n("b") - n("c") - n("abc") + n("ab") + n("bc") + n("ac")
        )


def complex_packs(
    engine: TrajectoryEngine, cx: TenComplex
) -> dict[str, _RegionPack]:
    return {
        key: engine.pack_region(getattr(cx, key))
        for key in ("a", "b", "c", "ab", "bc", "ac", "abc")
    }


# ---------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------


def _parse_complex_spec(spec: str) -> tuple[int, int]:
    """'ten-7' or 'ten-19-green' -> (size, color)."""
    parts = spec.split("-")
    if parts[0] != "ten" or len(parts) not in (2, 3):
        raise ValueError(f"bad complex spec {spec!r}")
    size = int(parts[1])
    color = COLOR_BY_NAME[parts[2]] if len(parts) == 3 else 0
    return size, color


def run_sweep(cfg: SweepConfig) -> tuple[list[SweepRecord], list[AggregateRow]]:
    """Run the configured sweep; fully deterministic given the config.

    Trajectories are evaluated in (p, sample) order and aggregated as a
    deterministic fold; the thread cap never changes results.
    """
    t = build_honeycomb_torus(cfg.L_x, cfg.L_y)
    engine = TrajectoryEngine(t)
    region_packs = [
        (name, engine.pack_region(named_region(t, name))) for name in cfg.regions
    ]
    cplx_packs = []
    for spec in cfg.complexes:
        size, color = _parse_complex_spec(spec)
        cplx_packs.append((spec, complex_packs(engine, ten_complex(t, size, color))))

    records: list[SweepRecord] = []
    for ip, p in enumerate(cfg.p_grid):
        for sample in range(cfg.n_samples):
            st = engine.sample(p, derive_seed(cfg.seed, ip, sample))
            for name, pack in region_packs:
                records.append(
                    SweepRecord(
                        p, sample, "negativity", name,
                        Fraction(engine.negativity(st, pack)),
                    )
                )
            for spec, packs in cplx_packs:
                records.append(
                    SweepRecord(p, sample, "ten", spec, Fraction(engine.ten(st, packs)))
                )
            records.append(
                SweepRecord(p, sample, "S_e", "", Fraction(engine.log_purity(st)))
            )
    aggregates = aggregate_records(records)
    if cfg.out is not None:
        write_results(records, aggregates, cfg.out, cfg)
    return records, aggregates


def aggregate_records(records: Sequence[SweepRecord]) -> list[AggregateRow]:
    """Exact mean and unbiased sample variance per (p, observable, region)."""
    groups: dict[tuple[float, str, str], list[Fraction]] = {}
    order: list[tuple[float, str, str]] = []
    for rec in records:
        key = (rec.p, rec.observable, rec.region)
        if key not in groups:
            groups[key] = []
            order.append(key)
        groups[key].append(rec.value)
    rows = []
    for key in order:
        vals = groups[key]
        n = len(vals)
        mean = Fraction(sum(vals), n)
        if n > 1:
            variance = sum((v - mean) ** 2 for v in vals) / (n - 1)
        else:
            variance = Fraction(0)
        stderr = math.sqrt(variance / n)
        rows.append(AggregateRow(key[0], key[1], key[2], mean, variance, stderr, n))
    return rows


# ---------------------------------------------------------------------
# Persistence
# ---------------------------------------------------------------------


def write_results(
    records: Sequence[SweepRecord],
    aggregates: Sequence[AggregateRow],
    path: str | Path,
    cfg: SweepConfig | None = None,
) -> dict[str, Path]:
    """Emit records.csv, aggregates.csv and manifest.json under ``path``."""
    out = Path(path)
    try:
        out.mkdir(parents=True, exist_ok=True)
        rec_path = out / "records.csv"
        with rec_path.open("w", newline="") as f:
            w = csv.writer(f)
            w.writerow(["p", "sample", "observable", "region", "value"])
            for r in records:
                w.writerow(
                    [repr(r.p), r.sample, r.observable, r.region, repr(float(r.value))]
                )
        agg_path = out / "aggregates.csv"
        with agg_path.open("w", newline="") as f:
            w = csv.writer(f)
            w.writerow(
                ["p", "observable", "region", "mean", "variance", "stderr", "n"]
            )
            for a in aggregates:
                w.writerow(
                    [
                        repr(a.p),
                        a.observable,
                        a.region,
                        repr(float(a.mean)),
                        repr(float(a.variance)),
                        repr(a.stderr),
                        a.n,
                    ]
                )
        man_path = out / "manifest.json"
        manifest = {
            "config": cfg.to_dict() if cfg is not None else None,
            "seed": cfg.seed if cfg is not None else None,
            "version": __version__,
            "created": time.strftime("%Y-%m-%dT%H:%M:%S", time.gmtime()),
        }
        man_path.write_text(json.dumps(manifest, indent=2) + "\n")
    except OSError as e:
        raise OSError(f"cannot write results under {out}: {e}") from e
    return {"records": rec_path, "aggregates": agg_path, "manifest": man_path}


def read_aggregates(path: str | Path) -> list[AggregateRow]:
    """Parse an aggregates.csv back into rows (floats become Fractions)."""
    rows = []
    with Path(path).open(newline="") as f:
        for rec in csv.DictReader(f):
            rows.append(
                AggregateRow(
                    float(rec["p"]),
                    rec["observable"],
                    rec["region"],
                    Fraction(rec["mean"]),
                    Fraction(rec["variance"]),
                    float(rec["stderr"]),
                    int(rec["n"]),
                )
            )
    return rows


# ---------------------------------------------------------------------
# Dense oracle
# ---------------------------------------------------------------------

_SINGLE = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def _dense_pauli(word: PauliWord) -> np.ndarray:
    m = np.eye(1, dtype=complex)
    # qubit 0 is the least-significant tensor factor
    for ch in word.to_string():
        m = np.kron(_SINGLE[ch], m)
    return m


def dense_negativity_oracle(s: StabilizerState, r: Region) -> float:
    """log2 trace norm of the partial transpose, from the full matrix.

    Builds rho as the normalized projector product over the generators
    (each sign-free generator is realized as the Hermitian Pauli with
    phase i^(x.z)), transposes the region's tensor factors and sums the
    absolute eigenvalues.  Only for <= 12 qubits.
    """
    n = s.n_qubits
    if n > 12:
        raise ValueError(f"dense oracle capped at 12 qubits, got {n}")
    dim = 1 << n
    rho = np.eye(dim, dtype=complex)
    for g in s.generators:
        rho = rho @ ((np.eye(dim, dtype=complex) + _dense_pauli(g)) / 2)
    rho /= np.trace(rho).real
    tensor = rho.reshape([2] * (2 * n))
    for v in r.vertices:
        # row axis of qubit v is n-1-v (qubit 0 least significant)
        ax = n - 1 - v
        tensor = np.swapaxes(tensor, ax, n + ax)
    rho_pt = tensor.reshape(dim, dim)
    eig = np.linalg.eigvalsh(rho_pt)
    return float(np.log2(np.abs(eig).sum()))


def random_stabilizer_state(
    n_qubits: int, rng: random.Random, n_generators: int | None = None
) -> StabilizerState:
    """A random commuting, independent, sign-free generator set."""
    if n_generators is None:
        n_generators = rng.randint(0, n_qubits)
    gens: list[PauliWord] = []
    attempts = 0
    while len(gens) < n_generators and attempts < 1000:
        attempts += 1
        w = PauliWord(
            rng.getrandbits(n_qubits), rng.getrandbits(n_qubits), n_qubits
        )
        if w.is_identity():
            continue
        if any(not w.commutes(g) for g in gens):
            continue
        rows = [g.symplectic_row() for g in gens]
        if rank_of_ints(rows + [w.symplectic_row()]) == len(gens):
            continue
        gens.append(w)
    return StabilizerState(n_qubits, gens)


def oracle_check(trials: int, max_qubits: int, seed: int) -> dict:
    """Rank-formula vs dense-oracle equivalence over random instances."""
    if max_qubits > 12:
        raise ValueError("max_qubits capped at 12")
    rng = random.Random(seed)
    failures = []
    for trial in range(trials):
        n = rng.randint(2, max_qubits)
        s = random_stabilizer_state(n, rng)
        k = rng.randint(0, n)
        region = Region(frozenset(rng.sample(range(n), k)), n)
        fast = float(negativity_exact(s, region))
        dense = dense_negativity_oracle(s, region)
        if abs(fast - dense) > 1e-9:
            failures.append(
                {"trial": trial, "tableau": s.tableau_text(), "fast": fast,
                 "dense": dense, "region": sorted(region.vertices)}
            )
    return {"trials": trials, "exact": trials - len(failures), "failures": failures}

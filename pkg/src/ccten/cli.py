"""Command-line entry point.

Subcommands: ``build-lattice`` (JSON lattice dump), ``sweep`` (Monte-Carlo
sweep writing records.csv / aggregates.csv / manifest.json), ``negativity``
(single-shot negativity or TEN of a named preset as JSON), ``center``
(gauge-group center vs maximally decohered state) and ``oracle-check``
(rank formula vs dense partial transpose on random states).

Flag values take precedence over a JSON config file (``--config``), which
takes precedence over built-in defaults.  Relative ``--out`` paths resolve
under ``$CCTEN_OUTPUT_ROOT`` when that variable is set.  Exit codes:
0 success, 1 runtime failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from .channels import ChannelConfig, apply_maximal, apply_stochastic
from .experiments import (
    SweepConfig,
    oracle_check,
    run_sweep,
)
from .gauging import center_matches_decohered_state, center_of, gauge_group
from .lattice import (
    COLOR_NAMES,
    build_honeycomb_torus,
    logical_loops,
    named_region,
    ten_complex,
)
from .negativity import negativity, ten
from .pauli import color_code_state

_LN2 = math.log(2.0)

_TEN_PRESETS = {"ten-7": 7, "ten-19": 19, "ten-37": 37}


def _parse_p_grid(text: str) -> list[float]:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"p-grid must be start:stop:count, got {text!r}")
    start, stop = float(parts[0]), float(parts[1])
    count = int(parts[2])
    if count < 1:
        raise ValueError("p-grid count must be >= 1")
    if count == 1:
        return [start]
    step = (stop - start) / (count - 1)
    return [round(start + i * step, 12) for i in range(count)]


def _resolve_out(path: str) -> str:
    root = os.environ.get("CCTEN_OUTPUT_ROOT")
    p = Path(path)
    if root and not p.is_absolute():
        p = Path(root) / p
    return str(p)


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise ValueError(f"cannot read config {path}: {e}") from e
    if not isinstance(data, dict):
        raise ValueError(f"config {path} must be a JSON object")
    return data


def _merged(args: argparse.Namespace, config: dict, key: str, default):
    """flags > config file > defaults."""
    flag = getattr(args, key.replace("-", "_"), None)
    if flag is not None:
        return flag
    if key in config:
        return config[key]
    return default


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ccten",
        description="Color-code decoherence simulator: negativity, TEN, "
        "purity, gauge-group centers.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p):
        p.add_argument("--config", help="JSON config file (flags override it)")
        p.add_argument("--L", type=int, help="torus size (L x L), multiple of 3")
        p.add_argument("--Lx", type=int, help="torus width (overrides --L)")
        p.add_argument("--Ly", type=int, help="torus height (overrides --L)")

    p = sub.add_parser("build-lattice", help="emit the lattice as JSON")
    add_common(p)
    p.add_argument("--out", help="output file (default: stdout)")

    p = sub.add_parser("sweep", help="Monte-Carlo sweep over p")
    add_common(p)
    p.add_argument("--p-grid", help="start:stop:count (default 0:0.5:21)")
    p.add_argument("--samples", type=int, help="trajectories per p (default 1000)")
    p.add_argument("--seed", type=int, help="base RNG seed (default 0)")
    p.add_argument(
        "--complex", action="append", dest="complexes", metavar="SPEC",
        help="TEN complex, e.g. ten-7 or ten-19-green (repeatable)",
    )
    p.add_argument(
        "--region", action="append", dest="regions", metavar="NAME",
        help="named negativity region, e.g. A1 (repeatable)",
    )
    p.add_argument("--threads", type=int, help="worker cap; results identical for any value")
    p.add_argument("--out", help="output directory")

    p = sub.add_parser("negativity", help="single-shot negativity or TEN")
    add_common(p)
    p.add_argument("--preset", required=True,
                   help="fig2-parallelogram, fig3-parallelogram, A1..A4, or ten-7/19/37")
    p.add_argument("--center-color", choices=["red", "green", "blue"],
                   help="center color for ten-* presets (default red)")
    p.add_argument("--p", type=float, required=True, help="channel strength in [0, 1]")
    p.add_argument("--seed", type=int, help="trajectory seed for 0 < p < 1 (default 0)")
    p.add_argument("--nats", action="store_true", help="report in nats instead of log-2")

    p = sub.add_parser("center", help="gauge-group center vs decohered state")
    add_common(p)

    p = sub.add_parser("oracle-check", help="rank formula vs dense oracle")
    p.add_argument("--config", help="JSON config file (flags override it)")
    p.add_argument("--trials", type=int, help="number of random instances (default 200)")
    p.add_argument("--max-qubits", type=int, help="max qubits per instance (default 8)")
    p.add_argument("--seed", type=int, help="RNG seed (default 0)")
    return parser


def _torus_from(args, config):
    L = _merged(args, config, "L", 12)
    L_x = _merged(args, config, "Lx", L)
    L_y = _merged(args, config, "Ly", L)
    return build_honeycomb_torus(L_x, L_y)


def _cmd_build_lattice(args, config) -> int:
    t = _torus_from(args, config)
    loops = logical_loops(t)
    doc = {
        "L_x": t.L_x,
        "L_y": t.L_y,
        "n_vertices": t.n_vertices,
        "n_plaquettes": t.n_plaquettes,
        "vertices": [
            {"index": v, "hexes": list(t.vertex_hexes[v])}
            for v in range(t.n_vertices)
        ],
        "plaquettes": [
            {
                "index": p,
                "coords": list(t.hex_coords(p)),
                "color": COLOR_NAMES[t.plaquette_color[p]],
                "vertices": list(t.plaquette_vertices[p]),
            }
            for p in range(t.n_plaquettes)
        ],
        "links": [
            {
                "index": l.index,
                "vertices": [l.v1, l.v2],
                "color": COLOR_NAMES[l.color],
                "hexes": list(l.hexes),
            }
            for l in t.links
        ],
        "logical_loops": {
            name: op.to_string() for name, op in loops.all_operators()
        },
    }
    text = json.dumps(doc, indent=2) + "\n"
    out = getattr(args, "out", None)
    if out:
        Path(_resolve_out(out)).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_sweep(args, config) -> int:
    L = _merged(args, config, "L", 12)
    grid_text = _merged(args, config, "p-grid", "0:0.5:21")
    out = _merged(args, config, "out", None)
    cfg = SweepConfig(
        L_x=_merged(args, config, "Lx", L),
        L_y=_merged(args, config, "Ly", L),
        p_grid=_parse_p_grid(grid_text) if isinstance(grid_text, str) else grid_text,
        n_samples=_merged(args, config, "samples", 1000),
        seed=_merged(args, config, "seed", 0),
        complexes=_merged(args, config, "complexes", ["ten-7"]),
        regions=_merged(args, config, "regions", []),
        threads=_merged(args, config, "threads", os.cpu_count() or 1),
        out=_resolve_out(out) if out else None,
    )
    records, aggregates = run_sweep(cfg)
    sys.stdout.write(
        f"sweep done: {len(records)} records, {len(aggregates)} aggregate rows"
        + (f", written to {cfg.out}\n" if cfg.out else "\n")
    )
    return 0


def _cmd_negativity(args, config) -> int:
    t = _torus_from(args, config)
    p = args.p
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p = {p} outside [0, 1]")
    seed = _merged(args, config, "seed", 0)
    state = color_code_state(t)
    if p == 1.0:
        state = apply_maximal(state, t)
    elif p > 0.0:
        state = apply_stochastic(state, ChannelConfig.for_torus(t, p, seed), t)
    unit = _LN2 if args.nats else 1.0
    if args.preset in _TEN_PRESETS:
        color = _merged(args, config, "center-color", "red")
        cx = ten_complex(t, _TEN_PRESETS[args.preset], color)
        value = ten(state, cx)
        doc = {
            "preset": args.preset,
            "center_color": color,
            "observable": "ten",
            "p": p,
            "seed": seed,
            "value": float(value) * unit,
            "units": "nats" if args.nats else "log2",
            "regions": {
                key: sorted(getattr(cx, key).vertices) for key in ("a", "b", "c")
            },
        }
    else:
        region = named_region(t, args.preset)
        value = negativity(state, region)
        doc = {
            "preset": args.preset,
            "observable": "negativity",
            "p": p,
            "seed": seed,
            "value": float(value) * unit,
            "units": "nats" if args.nats else "log2",
            "n_vertices_in_region": len(region),
            "boundary_honeycomb": region.boundary_honeycomb,
            "boundary_triangular": region.boundary_triangular,
        }
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    return 0


def _cmd_center(args, config) -> int:
    t = _torus_from(args, config)
    span = gauge_group(t)
    center = center_of(span)
    equal, report = center_matches_decohered_state(t, span)
    sys.stdout.write(center.tableau_text() + "\n")
    sys.stdout.write(json.dumps({"match": equal, **report}, indent=2) + "\n")
    return 0 if equal else 1


def _cmd_oracle_check(args, config) -> int:
    trials = _merged(args, config, "trials", 200)
    max_qubits = _merged(args, config, "max-qubits", 8)
    seed = _merged(args, config, "seed", 0)
    report = oracle_check(trials, max_qubits, seed)
    sys.stdout.write(f"{report['exact']}/{report['trials']} exact\n")
    if report["failures"]:
        sys.stdout.write(json.dumps(report["failures"], indent=2) + "\n")
        return 1
    return 0


_COMMANDS = {
    "build-lattice": _cmd_build_lattice,
    "sweep": _cmd_sweep,
    "negativity": _cmd_negativity,
    "center": _cmd_center,
    "oracle-check": _cmd_oracle_check,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = _load_config(args.config)
        return _COMMANDS[args.subcommand](args, config)
    except SystemExit:
        raise
    except ValueError as e:
        sys.stderr.write(f"usage error: {e}\n")
        return 2
    except Exception as e:  # runtime failures -> exit 1 with a diagnostic
        sys.stderr.write(f"error: {e}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())

import json

import pytest

from ccten.cli import _parse_p_grid, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_p_grid_parsing():
    assert _parse_p_grid("0:0.5:3") == [0.0, 0.25, 0.5]
    assert _parse_p_grid("0.1:0.1:1") == [0.1]
    with pytest.raises(ValueError):
        _parse_p_grid("0:0.5")
    with pytest.raises(ValueError):
        _parse_p_grid("0:0.5:0")


def test_negativity_fresh_strip(capsys):
    code, out, _ = run(
        capsys, "negativity", "--L", "12", "--preset", "fig2-parallelogram", "--p", "0"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["value"] == 8.0
    assert doc["units"] == "log2"


def test_negativity_decohered_strip(capsys):
    code, out, _ = run(
        capsys, "negativity", "--L", "12", "--preset", "fig3-parallelogram", "--p", "1"
    )
    assert code == 0
    assert json.loads(out)["value"] == 7.0


def test_negativity_nats(capsys):
    import math

    code, out, _ = run(
        capsys, "negativity", "--L", "12", "--preset", "A1", "--p", "0", "--nats"
    )
    doc = json.loads(out)
    assert doc["value"] == pytest.approx(10 * math.log(2))
    assert doc["units"] == "nats"


def test_negativity_ten_preset(capsys):
    code, out, _ = run(
        capsys, "negativity", "--L", "12", "--preset", "ten-7", "--p", "0",
        "--center-color", "green",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["observable"] == "ten"
    assert doc["value"] == 2.0
    assert doc["center_color"] == "green"


def test_negativity_bad_p(capsys):
    code, _, err = run(
        capsys, "negativity", "--L", "12", "--preset", "A1", "--p", "2"
    )
    assert code == 2
    assert "usage error" in err


def test_negativity_unknown_preset(capsys):
    code, _, err = run(
        capsys, "negativity", "--L", "12", "--preset", "A9", "--p", "0"
    )
    assert code == 2


def test_unknown_flag_rejected():
    with pytest.raises(SystemExit) as e:
        main(["negativity", "--bogus", "1"])
    assert e.value.code == 2


def test_build_lattice(capsys):
    code, out, _ = run(capsys, "build-lattice", "--L", "6")
    assert code == 0
    doc = json.loads(out)
    assert doc["n_vertices"] == 72
    assert len(doc["plaquettes"]) == 36
    assert len(doc["links"]) == 108
    assert set(doc["logical_loops"]) == {f"{k}{i}" for k in "ZX" for i in range(1, 5)}


def test_center_subcommand(capsys):
    code, out, _ = run(capsys, "center", "--L", "6")
    assert code == 0
    assert '"match": true' in out


def test_oracle_check_subcommand(capsys):
    code, out, _ = run(
        capsys, "oracle-check", "--trials", "10", "--max-qubits", "5", "--seed", "3"
    )
    assert code == 0
    assert out.strip() == "10/10 exact"


def test_sweep_with_env_output_root(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("CCTEN_OUTPUT_ROOT", str(tmp_path))
    code, out, _ = run(
        capsys, "sweep", "--L", "6", "--p-grid", "0:0.5:2", "--samples", "3",
        "--seed", "4", "--out", "runs/a",
    )
    assert code == 0
    assert (tmp_path / "runs" / "a" / "records.csv").exists()
    manifest = json.loads((tmp_path / "runs" / "a" / "manifest.json").read_text())
    assert manifest["config"]["seed"] == 4


def test_config_file_precedence(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"L": 6, "samples": 2, "seed": 9, "p-grid": "0:0:1",
                               "out": str(tmp_path / "from_config")}))
    # config alone
    code, _, _ = run(capsys, "sweep", "--config", str(cfg))
    assert code == 0
    man = json.loads((tmp_path / "from_config" / "manifest.json").read_text())
    assert man["config"]["seed"] == 9
    assert man["config"]["n_samples"] == 2
    # flag overrides config
    code, _, _ = run(
        capsys, "sweep", "--config", str(cfg), "--seed", "12",
        "--out", str(tmp_path / "flagged"),
    )
    assert code == 0
    man = json.loads((tmp_path / "flagged" / "manifest.json").read_text())
    assert man["config"]["seed"] == 12


def test_config_file_bad(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("[]")
    code, _, err = run(capsys, "sweep", "--config", str(bad))
    assert code == 2
    missing = tmp_path / "missing.json"
    code, _, _ = run(capsys, "sweep", "--config", str(missing))
    assert code == 2


def test_sweep_rerun_byte_identical(capsys, tmp_path):
    args = ["sweep", "--L", "6", "--p-grid", "0:0.4:3", "--samples", "4",
            "--seed", "7"]
    assert main(args + ["--out", str(tmp_path / "x")]) == 0
    assert main(args + ["--out", str(tmp_path / "y")]) == 0
    capsys.readouterr()
    for name in ("records.csv", "aggregates.csv"):
        assert (tmp_path / "x" / name).read_bytes() == (tmp_path / "y" / name).read_bytes()
    mx = json.loads((tmp_path / "x" / "manifest.json").read_text())
    my = json.loads((tmp_path / "y" / "manifest.json").read_text())
    mx.pop("created")
    my.pop("created")
    mx["config"].pop("out")
    my["config"].pop("out")
    assert mx == my

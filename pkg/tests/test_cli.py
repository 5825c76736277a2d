import json

import pytest

from magnomech.cli import main

REF_PARAMS = {"delta_a": 1000.0, "delta_m": 1000.0, "g": 0.28,
              "eta": 2e-08, "kappa_a": 0.02, "kappa_m": 0.3,
              "gamma": 0.02, "nbar_b": 0.0}
REF_DRIVE = {"mode": "couplings", "g1": 0.21, "g2": 0.0}


def write_config(tmp_path, name, **overrides):
    cfg = {"mode": "steady", "params": dict(REF_PARAMS),
           "drive": dict(REF_DRIVE)}
    cfg.update(overrides)
    path = tmp_path / name
    path.write_text(json.dumps(cfg), encoding="utf-8")
    return str(path)


def run(tmp_path, config_path, *extra):
    out = tmp_path / "out.dat"
    code = main(["run", "--config", config_path, "--output", str(out),
                 *extra])
    text = out.read_text(encoding="utf-8") if out.exists() else ""
    return code, text


def test_steady_mode_row(tmp_path):
    cfg = write_config(tmp_path, "steady.json")
    code, text = run(tmp_path, cfg)
    assert code == 0
    lines = text.split("\n")
    assert lines[0].startswith("e_n,g_a,g_b,stable")
    fields = lines[1].split(",")
    assert float(fields[0]) > 0
    assert fields[3] == "true"
    assert float(fields[5]) < 1e-10  # Lyapunov residual


def test_steady_round_trip_precision(tmp_path):
    cfg = write_config(tmp_path, "steady.json")
    _, csv_text = run(tmp_path, cfg)
    _, json_text = run(tmp_path, cfg, "--format", "json")
    row = csv_text.split("\n")[1].split(",")
    record = json.loads(json_text)[0]
    # 17 significant digits round-trip exactly through float parsing
    assert float(row[0]) == float(record["e_n"])
    assert float(row[0]) == 1.219085241204485


def test_evolve_zero_couplings_no_entanglement(tmp_path):
    cfg = write_config(tmp_path, "evolve.json", mode="evolve",
                      drive={"mode": "couplings", "g1": 0.0, "g2": 0.0},
                      t_end=5.0, dt=0.01, sample_every=50)
    code, text = run(tmp_path, cfg)
    assert code == 0
    rows = [line.split(",") for line in text.strip().split("\n")[1:]]
    assert len(rows) == 11
    assert all(float(r[1]) == 0.0 for r in rows)


def test_sweep_mode_shape_and_order(tmp_path):
    cfg = write_config(tmp_path, "sweep.json", mode="sweep", variant="rwa",
                      grid={"gamma_values": [0.02, 0.07],
                            "nbar_values": [0.0, 1.0]})
    code, text = run(tmp_path, cfg)
    assert code == 0
    lines = text.strip().split("\n")
    assert lines[0] == "gamma,nbar,peak_e_n,peak_g_a,peak_g_b,stable,regime"
    assert len(lines) == 5
    keys = [(float(l.split(",")[0]), float(l.split(",")[1]))
            for l in lines[1:]]
    assert keys == [(0.02, 0.0), (0.02, 1.0), (0.07, 0.0), (0.07, 1.0)]


def test_sweep_byte_identical_across_threads(tmp_path):
    cfg = write_config(tmp_path, "sweep.json", mode="sweep", variant="rwa",
                      grid={"gamma_values": [0.02, 0.05, 0.07],
                            "nbar_values": [0.0, 1.0, 3.0]})
    out1 = tmp_path / "t1.csv"
    out4 = tmp_path / "t4.csv"
    assert main(["run", "--config", cfg, "--output", str(out1),
                 "--threads", "1"]) == 0
    assert main(["run", "--config", cfg, "--output", str(out4),
                 "--threads", "4"]) == 0
    assert out1.read_bytes() == out4.read_bytes()


def test_couplings_mode_undefined_fields(tmp_path):
    cfg = write_config(tmp_path, "coup.json", mode="couplings")
    code, text = run(tmp_path, cfg)
    assert code == 0
    header, row = text.strip().split("\n")
    fields = dict(zip(header.split(","), row.split(",")))
    assert fields["r1"] == "" and fields["gt1"] == ""
    assert float(fields["r2"]) == pytest.approx(0.97295507452765639)
    assert "r1" in fields["reason"]


def test_config_error_exit_code(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json", encoding="utf-8")
    assert main(["run", "--config", str(path)]) == 2
    cfg = write_config(tmp_path, "badmode.json", mode="nonsense")
    assert main(["run", "--config", cfg]) == 2
    cfg = write_config(tmp_path, "badparam.json",
                      params={**REF_PARAMS, "kappa_a": -1.0})
    assert main(["run", "--config", cfg]) == 2


def test_instability_exit_code(tmp_path):
    # coupling above the squeezing threshold makes the drift non-Hurwitz
    cfg = write_config(tmp_path, "unstable.json",
                      drive={"mode": "couplings", "g1": 0.5, "g2": 0.0})
    code, text = run(tmp_path, cfg)
    assert code == 3
    record = json.loads(text)
    assert record["error"] == "UnstableDrift"


def test_numerical_failure_exit_code(tmp_path):
    # a grossly oversized step blows up the integration
    cfg = write_config(tmp_path, "blowup.json", mode="evolve",
                      variant="rwa", t_end=4000.0, dt=200.0)
    code, text = run(tmp_path, cfg)
    assert code == 4
    record = json.loads(text)
    assert record["exit_code"] == 4


def test_data_never_on_stderr(tmp_path, capsys):
    cfg = write_config(tmp_path, "steady.json")
    out = tmp_path / "out.csv"
    main(["run", "--config", cfg, "--output", str(out)])
    captured = capsys.readouterr()
    assert "e_n" not in captured.err

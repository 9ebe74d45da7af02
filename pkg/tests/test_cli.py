import csv
import io
import json
from pathlib import Path

import numpy as np
import pytest

from hmwkit import verify
from hmwkit.cli import (PHASE_CSV_COLUMNS, SWEEP_CSV_COLUMNS, build_report, dump_json, main,
                        run_sweep)
from hmwkit.config import ConfigError, load_config, parse_config
from hmwkit.exact import ExactComplex
from hmwkit.kemmer import beta

CONFIGS = Path(__file__).resolve().parent.parent / "configs"

BASE = {
    "field": {"lambda_m": 1.0},
    "path": {"kind": "circle", "center": [0.1, 0.0], "radius": 1.3},
    "particle": {"mu_e": 0.8, "s3": 1, "k": [0.4, 0.1]},
    "nc": {"theta": 0.02, "alpha": 0.95},
}


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, data, name="cfg.json"):
    p = tmp_path / name
    p.write_text(json.dumps(data) if not isinstance(data, str) else data)
    return str(p)


# verify

def test_verify_clean_and_deterministic():
    code, first, _ = run(["verify"])
    assert code == 0
    assert "FAIL" not in first
    assert first.strip().endswith("checks passed")
    assert run(["verify"])[1] == first


def test_verify_reports_corrupted_beta():
    def corrupt(nu):
        b = beta(nu)
        if nu != 2:
            return b
        entries = dict(b.items())
        entries[(3, 7)] = entries.get((3, 7), ExactComplex(0)) + ExactComplex(1)
        return type(b)(b.shape, entries)

    checks = verify.run_all(corrupt)
    failed = [c for c in checks if not c.passed]
    assert failed
    assert any(c.name.startswith("kemmer_residual(") for c in failed)
    text = verify.report(checks)
    assert any(line.startswith("FAIL  kemmer_residual(") for line in text.splitlines())


# phase

def test_phase_commutative_circle():
    code, out, _ = run(["phase", "--config", str(CONFIGS / "commutative_circle.json")])
    assert code == 0
    rep = json.loads(out)
    assert rep["schema"] == 1
    assert rep["phases"]["total"] == pytest.approx(2.0, rel=1e-8)
    assert rep["cross_check"]["agrees"] and not rep["flagged"]


def test_phase_json_byte_identical(tmp_path):
    cfg = write(tmp_path, BASE)
    a = run(["phase", "--config", cfg])[1]
    b = run(["phase", "--config", cfg])[1]
    assert a == b
    assert list(json.loads(a)) == sorted(json.loads(a))


def test_echo_round_trip(tmp_path):
    rep = json.loads(run(["phase", "--config", str(CONFIGS / "nc_phase_space.json")])[1])
    again = build_report(parse_config(rep["inputs"]))
    assert again["phases"] == rep["phases"]
    assert again["terms"] == rep["terms"]


def test_phase_csv(tmp_path):
    code, out, _ = run(["phase", "--config", write(tmp_path, BASE), "--csv"])
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert tuple(rows[0]) == PHASE_CSV_COLUMNS
    assert len(rows) == 2
    rep = build_report(parse_config(BASE))
    assert float(rows[1][3]) == rep["phases"]["total"]


def test_phase_singular_exit_code():
    code, out, err = run(["phase", "--config", str(CONFIGS / "polygon_through_filament.json")])
    assert code == 3
    assert out == ""
    assert "singular" in err


def test_phase_tolerance_exit_code(tmp_path):
    data = dict(BASE, quadrature={"max_evaluations": 40, "abs_tol": 1e-300, "rel_tol": 0.0})
    code, out, err = run(["phase", "--config", write(tmp_path, data)])
    assert code == 4
    assert out == ""


@pytest.mark.parametrize("mutate,needle", [
    (lambda d: d["path"].update(radius=-1.0), "path.circle.radius"),
    (lambda d: d["particle"].update(s3=2), "particle.s3"),
    (lambda d: d["field"].update(bogus=1), "field.bogus"),
    (lambda d: d["nc"].update(theta=0.0), "nc:"),
    (lambda d: d["particle"].update(speed=1.0), "give either k or speed"),
])
def test_config_errors(tmp_path, mutate, needle):
    data = json.loads(json.dumps(BASE))
    mutate(data)
    code, out, err = run(["phase", "--config", write(tmp_path, data)])
    assert code == 2
    assert needle in err


def test_config_unreadable(tmp_path):
    assert run(["phase", "--config", str(tmp_path / "missing.json")])[0] == 2
    assert run(["phase", "--config", write(tmp_path, "{not json")])[0] == 2


def test_speed_resolves_wave_vector():
    data = json.loads(json.dumps(BASE))
    data["particle"] = {"mu_e": 1.0, "s3": 1, "mass": 2.0, "speed": 0.5, "direction": [0, 3]}
    assert parse_config(data).particle.wave_vector() == (0.0, 1.0)


# sweeps

def sweep_rows(text):
    rows = list(csv.DictReader(io.StringIO(text)))
    assert tuple(csv.reader(io.StringIO(text)).__next__()) == SWEEP_CSV_COLUMNS
    return rows


def test_sweep_theta_linear():
    data = json.loads(json.dumps(BASE))
    data["nc"] = {"theta": 0.0, "alpha": 1.0}
    rows = sweep_rows(run_sweep(parse_config(data), "theta", 0.0, 0.1, 6))
    t = np.array([float(r["value"]) for r in rows])
    d = np.array([float(r["delta_ncs"]) for r in rows])
    assert all(r["error"] == "" for r in rows)
    coef, *_ = np.linalg.lstsq(t[:, None], d, rcond=None)
    assert np.linalg.norm(d - coef[0] * t) <= 1e-9 * np.linalg.norm(d)


def test_sweep_alpha_to_one():
    rows = sweep_rows(run_sweep(parse_config(BASE), "alpha", 0.9, 1.0, 5))
    vals = [abs(float(r["delta_ncps"])) for r in rows]
    assert vals[-1] == 0.0
    assert vals[0] > vals[2] > vals[-1]


def test_sweep_radius_non_enclosing():
    data = json.loads(json.dumps(BASE))
    data["path"] = {"kind": "circle", "center": [5.0, 0.0], "radius": 1.0}
    rows = sweep_rows(run_sweep(parse_config(data), "radius", 0.5, 4.0, 5))
    assert all(abs(float(r["phi_hmw"])) < 1e-8 for r in rows)


def test_sweep_s3_list_and_parallel_order():
    cfg = parse_config(BASE)
    serial = run_sweep(cfg, "s3-list", -1, 1, 3)
    assert [r["value"] for r in sweep_rows(serial)] == ["-1", "0", "1"]
    assert run_sweep(cfg, "s3", -1, 1, 3, jobs=2) == serial


def test_sweep_row_errors_do_not_abort():
    data = json.loads(json.dumps(BASE))
    rows = sweep_rows(run_sweep(parse_config(data), "theta", 0.0, 0.1, 3))
    assert rows[0]["error"].startswith("ConfigError")
    assert rows[1]["error"] == "" and rows[2]["error"] == ""


def test_sweep_cli_errors(tmp_path):
    cfg = write(tmp_path, BASE)
    assert run(["sweep", "--config", cfg, "--param", "mass", "--from", "0",
                "--to", "1", "--steps", "3"])[0] == 2
    assert run(["sweep", "--config", cfg, "--param", "theta", "--from", "0",
                "--to", "1", "--steps", "1"])[0] == 2
    code, out, _ = run(["sweep", "--config", cfg, "--param", "|k|", "--from", "0",
                        "--to", "1", "--steps", "3"])
    assert code == 0 and len(out.strip().splitlines()) == 4

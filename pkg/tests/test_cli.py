import csv
import io
import json
import subprocess
import sys

import pytest

from ctcsim.cli import main, parse_range, read_config


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows_of(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_scan_fig2_single_point(capsys):
    code, out, _ = run(capsys, "scan-fig2", "--beta-range", "0.5:0.5", "--speed-range", "1:1")
    assert code == 0
    assert out == "c_z_rest,beta,c_z_beta,region\n1,0.5,1,POSITIVE_TIME\n"


def test_scan_fig2_default_size(capsys):
    code, out, _ = run(capsys, "scan-fig2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "c_z_rest,beta,c_z_beta,region"
    assert len(lines) == 1 + 200 * 200


def test_scan_fig2_deterministic(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["scan-fig2", "--out", str(a)]) == 0
    assert main(["scan-fig2", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_scan_fig2_twelve_digits(capsys):
    _, out, _ = run(capsys, "scan-fig2", "--beta-range", "0.3:0.3", "--speed-range",
                    "1.3:1.3")
    value = rows_of(out)[0]["c_z_beta"]
    assert value == format(float(value), ".12g")
    assert len(value.replace(".", "").lstrip("0")) <= 12


def test_scan_fig2_json(capsys):
    code, out, _ = run(capsys, "scan-fig2", "--beta-range", "0.4:0.4",
                       "--speed-range", "2.5:2.5", "--format", "json")
    assert code == 0
    assert json.loads(out) == [{"c_z_rest": 2.5, "beta": 0.4, "c_z_beta": None,
                                "region": "SINGULAR"}]


@pytest.mark.parametrize("argv", [
    ["--beta-range", "0:0.5"],
    ["--beta-range", "0.5:0.2"],
    ["--beta-range", "abc"],
    ["--speed-range", "0.5:2"],
])
def test_scan_fig2_bad_input(capsys, argv):
    code, _, err = run(capsys, "scan-fig2", *argv)
    assert code == 2 and "error" in err


def test_pulse_fig3(capsys):
    code, out, _ = run(capsys, "pulse-fig3", "--beta", "0.6")
    assert code == 0
    rows = rows_of(out)
    assert list(rows[0]) == ["F", "c_p", "v_pulse", "abs_c_p", "horizon"]
    flagged = [float(r["F"]) for r in rows if r["horizon"] == "true"]
    assert len(flagged) == 1 and abs(flagged[0] - 25 / 9) <= 0.01


def test_pulse_fig3_no_boost(capsys):
    code, out, _ = run(capsys, "pulse-fig3", "--beta", "0.0")
    assert code == 0
    assert {float(r["v_pulse"]) for r in rows_of(out)} == {0.0}


def test_pulse_fig3_bad_beta(capsys):
    code, _, err = run(capsys, "pulse-fig3", "--beta", "1.5")
    assert code == 2


def test_flux_profile_flat(capsys):
    code, out, _ = run(capsys, "flux-profile", "--F", "1", "--dc", "0")
    rec = json.loads(out)
    assert code == 0 and rec["ac"] == 0 and rec["verdict"] == "FEASIBLE"


def test_flux_profile_ceiling(capsys):
    code, out, _ = run(capsys, "flux-profile", "--F", "6.39245", "--dc", "0.45")
    rec = json.loads(out)
    assert code == 0
    assert abs(rec["total"]) < 1e-3
    assert rec["c_ratio"] == pytest.approx(2.5283, abs=1e-4)


def test_flux_profile_negative(capsys):
    code, out, _ = run(capsys, "flux-profile", "--F", "-1", "--dc", "0.45")
    assert code == 3
    assert json.loads(out)["verdict"] == "CHRONOLOGY_PROTECTED"


def test_flux_profile_too_fast(capsys):
    code, out, _ = run(capsys, "flux-profile", "--F", "9", "--format", "csv")
    assert code == 3
    assert rows_of(out)[0]["verdict"] == "OUT_OF_RANGE"


def test_flux_profile_wire_csv(capsys):
    code, out, _ = run(capsys, "flux-profile", "--R", "1", "--n", "2",
                       "--r-range", "0.4:1.2:9", "--t", "0.5", "--format", "csv")
    assert code == 0
    rows = rows_of(out)
    assert list(rows[0]) == ["r", "t", "phi_total_fraction"]
    assert len(rows) == 9 and all(r["t"] == "0.5" for r in rows)
    assert float(rows[-1]["phi_total_fraction"]) == pytest.approx(0.45)


def test_flux_profile_wire_infeasible(capsys):
    code, out, _ = run(capsys, "flux-profile", "--R", "1", "--r-range", "0.1:1:5")
    assert code == 3
    assert json.loads(out)["verdict"] == "OUT_OF_RANGE"


def test_flux_profile_missing_target(capsys):
    code, _, err = run(capsys, "flux-profile")
    assert code == 2 and "--F" in err


def test_ctc_check_ctc(capsys):
    code, out, _ = run(capsys, "ctc-check", "--F1", "6.25", "--F2", "6.25",
                       "--beta", "0.8", "--L", "1")
    rep = json.loads(out)
    assert code == 0
    assert rep["region"] == "CTC"
    assert rep["feasibility"]["verdict"] == "CHRONOLOGY_PROTECTED"
    assert rep["classical_assembly"]["theta1_deg"] == pytest.approx(59.036, abs=1e-3)
    assert rep["round_trip_time"] < 0


def test_ctc_check_flat(capsys):
    code, out, _ = run(capsys, "ctc-check", "--F1", "1", "--F2", "1", "--beta", "0.9")
    rep = json.loads(out)
    assert rep["region"] == "POSITIVE_TIME"
    assert rep["feasibility"]["verdict"] == "FEASIBLE"
    assert rep["classical_assembly"] is None


def test_ctc_check_threshold(capsys):
    _, out, _ = run(capsys, "ctc-check", "--F1", "6.25", "--beta", "0.68966")
    rep = json.loads(out)
    assert abs(rep["round_trip_time"]) < 1e-4
    assert rep["thresholds"]["ctc_general"] == pytest.approx(0.689655172414)


def test_ctc_check_singular(capsys):
    _, out, _ = run(capsys, "ctc-check", "--F1", "6.25", "--beta", "0.4")
    rep = json.loads(out)
    assert rep["region"] == "SINGULAR" and rep["round_trip_time"] is None


@pytest.mark.parametrize("argv", [["--F1", "0.5", "--beta", "0.5"],
                                  ["--F1", "2", "--beta", "1.2"],
                                  ["--F1", "2"]])
def test_ctc_check_invalid(capsys, argv):
    code, _, _ = run(capsys, "ctc-check", *argv)
    assert code == 2


def test_optics_design_symmetric(capsys):
    code, out, _ = run(capsys, "optics-design", "--F1", "6.25", "--F2", "6.25",
                       "--mode", "symmetric")
    rep = json.loads(out)
    assert code == 0
    assert rep["assembly"]["theta1_deg"] == pytest.approx(59.04, abs=0.01)
    assert rep["timeline"]["meeting_x"] == pytest.approx(0.5)


def test_optics_design_no_ctc(capsys):
    code, _, err = run(capsys, "optics-design", "--F1", "1", "--F2", "1")
    assert code == 4
    code, _, _ = run(capsys, "optics-design", "--F1", "6.25", "--beta", "0.6",
                     "--mode", "as-given")
    assert code == 4


def test_optics_design_timeline_csv(capsys):
    code, out, _ = run(capsys, "optics-design", "--F1", "6.25", "--n-samples", "2",
                       "--format", "csv")
    rows = rows_of(out)
    assert code == 0 and len(rows) == 7
    assert list(rows[0]) == ["time", "x", "image_id", "kind"]
    assert rows[-1]["kind"] == "annihilate"


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# single point\nbeta-range = 0.5:0.5\nspeed_range = 1:1\n",
                   encoding="utf-8")
    code, out, _ = run(capsys, "scan-fig2", "--config", str(cfg))
    assert code == 0 and len(out.splitlines()) == 2
    code, out, _ = run(capsys, "scan-fig2", "--config", str(cfg), "--speed-range", "1:2:3")
    assert len(out.splitlines()) == 4


def test_config_file_errors(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("nonsense = 1\n", encoding="utf-8")
    code, _, err = run(capsys, "scan-fig2", "--config", str(cfg))
    assert code == 2 and "nonsense" in err
    cfg.write_text("no equals sign\n", encoding="utf-8")
    assert run(capsys, "scan-fig2", "--config", str(cfg))[0] == 2
    assert run(capsys, "scan-fig2", "--config", str(tmp_path / "missing.cfg"))[0] == 2


def test_parse_range():
    assert parse_range("1:2", 10) == (1.0, 2.0, 10)
    assert parse_range("1:1", 10) == (1.0, 1.0, 1)
    assert parse_range("0:1:3", 10) == (0.0, 1.0, 3)


def test_read_config(tmp_path):
    p = tmp_path / "c.cfg"
    p.write_text("--c-v = 2  # speed\n\nformat=json\n", encoding="utf-8")
    assert read_config(p) == {"c_v": "2", "format": "json"}


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "ctcsim.cli", "scan-fig2",
                          "--beta-range", "0.5:0.5", "--speed-range", "1:1"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert res.stdout.splitlines()[1] == "1,0.5,1,POSITIVE_TIME"

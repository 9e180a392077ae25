"""CLI: every subcommand, exit codes, artifact determinism."""

import json

from ranklab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_explicit_then_verify(tmp_path, capsys):
    inst = tmp_path / "inst.json"
    report = tmp_path / "report.json"
    code, out, _ = run(capsys, "gen-explicit", "--q", "2", "--g", "2",
                       "--s", "1", "--n", "4", "--m", "4",
                       "--out", str(inst))
    assert code == 0
    assert "5 codewords at radius 2" in out
    code, out, _ = run(capsys, "verify", "--in", str(inst),
                       "--out", str(report))
    assert code == 0
    assert "all passed" in out
    data = json.loads(report.read_text())
    assert data["all_passed"] is True
    assert len(data["checks"]) == 5


def test_gen_counting_then_verify(tmp_path, capsys):
    inst = tmp_path / "inst.json"
    code, _, _ = run(capsys, "gen-counting", "--q", "2", "--n", "4",
                     "--m", "4", "--k", "1", "--g", "2", "--out", str(inst))
    assert code == 0
    data = json.loads(inst.read_text())
    assert data["kind"] == "counting"
    assert data["claimed_bound"] == 5
    code, _, _ = run(capsys, "verify", "--in", str(inst))
    assert code == 0


def test_verify_corrupted_instance_exits_1(tmp_path, capsys):
    inst = tmp_path / "inst.json"
    run(capsys, "gen-explicit", "--q", "2", "--g", "2", "--s", "1",
        "--n", "4", "--m", "4", "--out", str(inst))
    data = json.loads(inst.read_text())
    data["codewords"][0][0] ^= 1
    inst.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", "--in", str(inst))
    assert code == 1
    assert "FAILED" in out


def test_bad_config_exits_2_with_json_error(tmp_path, capsys):
    inst = tmp_path / "inst.json"
    code, _, err = run(capsys, "gen-explicit", "--q", "2", "--g", "2",
                       "--s", "1", "--n", "5", "--m", "5", "--out", str(inst))
    assert code == 2
    payload = json.loads(err.strip())
    assert payload["error"] == "DivisibilityViolation"
    code, _, err = run(capsys, "verify", "--in", str(tmp_path / "nope.json"))
    assert code == 2


def test_missing_required_flag_exits_2(capsys):
    assert main(["gen-explicit", "--q", "2"]) == 2


def test_out_of_range_serial_in_file_exits_2(tmp_path, capsys):
    inst = tmp_path / "inst.json"
    run(capsys, "gen-explicit", "--q", "2", "--g", "2", "--s", "1",
        "--n", "4", "--m", "4", "--out", str(inst))
    data = json.loads(inst.read_text())
    data["center"][0] = 99999
    inst.write_text(json.dumps(data))
    code, _, err = run(capsys, "verify", "--in", str(inst))
    assert code == 2
    assert json.loads(err.strip())["error"] == "ParamMismatch"


def test_ball_command(tmp_path, capsys):
    inst = tmp_path / "inst.json"
    run(capsys, "gen-explicit", "--q", "2", "--g", "2", "--s", "1",
        "--n", "4", "--m", "4", "--out", str(inst))
    code, out, _ = run(capsys, "ball", "--in", str(inst))
    assert code == 0
    assert out.strip() == "5"
    listing = tmp_path / "ball.json"
    code, out, _ = run(capsys, "ball", "--in", str(inst), "--tau", "4",
                       "--out", str(listing))
    assert out.strip() == "16"
    data = json.loads(listing.read_text())
    assert data["count"] == 16


def test_bounds_table(tmp_path, capsys):
    out_json = tmp_path / "bounds.json"
    code, out, _ = run(capsys, "bounds", "--q", "2", "--n", "6", "--m", "6",
                       "--k", "3", "--g", "2", "--out", str(out_json))
    assert code == 0
    row = next(line for line in out.splitlines() if line.strip().
               startswith("2 "))
    assert "651/64" in row and "21" in row and "16" in row
    data = json.loads(out_json.read_text())
    assert data["rows"][0] == {
        "tau": 2, "prior": "651/64", "prior_vacuous": False,
        "counting": "21", "simplified": 16, "explicit": 21}


def test_lift_verify_command(tmp_path, capsys):
    inst = tmp_path / "inst.json"
    run(capsys, "gen-explicit", "--q", "2", "--g", "2", "--s", "1",
        "--n", "4", "--m", "4", "--out", str(inst))
    code, out, _ = run(capsys, "lift-verify", "--in", str(inst))
    assert code == 0
    assert "all passed" in out


def test_compare_radius_command(capsys):
    code, out, _ = run(capsys, "compare-radius", "--i", "1", "--n", "1024")
    assert code == 0
    assert "tau < tau': True" in out
    code, _, _ = run(capsys, "compare-radius", "--i", "1", "--n", "1000")
    assert code == 2


def test_pretty_flag_adds_renderings(tmp_path, capsys):
    inst = tmp_path / "inst.json"
    run(capsys, "gen-explicit", "--q", "2", "--g", "2", "--s", "1",
        "--n", "4", "--m", "4", "--pretty", "--out", str(inst))
    data = json.loads(inst.read_text())
    assert "center_pretty" in data and "pivot_pretty" in data


def test_artifacts_are_byte_identical_across_runs(tmp_path, capsys):
    args = ["gen-counting", "--q", "2", "--n", "6", "--m", "6", "--k", "3",
            "--g", "2", "--seed", "7"]
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()

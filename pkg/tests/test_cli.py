"""CLI behavior: golden outputs, exit codes, determinism, report files."""

import json

from reguli.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_stable(capsys):
    code, out, _ = run_cli(capsys, "classify", "[[x,z],[w,y]]")
    assert code == 0
    report = json.loads(out)
    assert report["stratum"] == "STABLE"
    assert report["dependency_form"] == [1]
    assert report["end_dim"] == 1
    assert report["det_gram_rank"] == 4


def test_classify_y0_and_unstable(capsys):
    code, out, _ = run_cli(capsys, "classify", "[[x,0],[0,x]]")
    assert code == 0 and json.loads(out)["stratum"] == "Y0"
    code, out, _ = run_cli(capsys, "classify", "[[x,y],[0,0]]")
    assert code == 0 and json.loads(out)["stratum"] == "UNSTABLE"


def test_classify_malformed_input_exit_2(capsys):
    code, _, err = run_cli(capsys, "classify", "[[x,z],[w]]")
    assert code == 2
    assert "error" in err


def test_phi_golden(capsys):
    code, out, _ = run_cli(capsys, "phi", "[[x,z],[w,y]]")
    assert code == 0
    report = json.loads(out)
    assert report["conic"] == [
        [0, 1, 0],
        [0, 0, 0],
        [0, 0, -1],
        [1, 0, 0],
        [0, 0, 0],
        [0, 1, 0],
    ]
    assert report["diagnostics"]["plucker_ok"] is True
    assert report["diagnostics"]["degree"] == 2


def test_phi_not_stable_exit_3(capsys):
    code, _, err = run_cli(capsys, "phi", "[[x,z],[0,y]]")
    assert code == 3
    assert "stable" in err


def test_psi_worked_pair(capsys):
    code, out, _ = run_cli(
        capsys, "psi", "xy-2zw", "[[1,0,1,0],[0,2,0,1]]"
    )
    assert code == 0
    report = json.loads(out)
    assert report["type"] == 1
    assert report["det_equals_minus_b"] is True
    # det N = stuv: serialized (2,2) grid has a single 1 in the stuv slot
    assert report["det"] == [0, 0, 0, 0, 1, 0, 0, 0, 0]


def test_psi_geometric_faults_exit_4(capsys):
    code, _, err = run_cli(capsys, "psi", "xy-zw", "[[0,1,0,0],[0,0,0,1]]")
    assert code == 4 and "EqualsQ" in err
    code, _, err = run_cli(
        capsys, "psi", "x^2+y^2+z^2+w^2", "[[1,0,1,0],[0,2,0,1]]"
    )
    assert code == 4 and "LineNotOnQuadric" in err


def test_psi_ruling_routes_to_special_kind(capsys):
    code, out, _ = run_cli(capsys, "psi", "xy-2zw", "[[0,1,0,0],[0,0,0,1]]")
    assert code == 0
    report = json.loads(out)
    assert report["type"] == 3
    assert report["contracts_to"] == "D01"


def test_roundtrip_worked_pair(capsys):
    code, out, _ = run_cli(
        capsys, "roundtrip", "xy-2zw", "[[1,0,1,0],[0,2,0,1]]"
    )
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "PASS"
    stages = {s["stage"]: s for s in report["stages"]}
    assert stages["parameter_of_line"]["parameter"] is not None
    # the recovered quadric is proportional to the input xy - 2zw
    swept = stages["phi_sweep"]["swept_quadric"]
    assert swept[1] * (-2) == swept[8] * 1 and swept[1] != 0


def test_roundtrip_ruling_pair_reports_contraction(capsys):
    code, out, _ = run_cli(
        capsys, "roundtrip", "xy-2zw", "[[0,1,0,0],[0,0,0,1]]"
    )
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "PASS"
    stages = {s["stage"]: s for s in report["stages"]}
    assert stages["contraction"]["special_point"] == "D01"
    assert stages["phi_sweep"]["swept_quadric"] == [0, 1, 0, 0, 0, 0, 0, 0, -1, 0]


def test_motivic_goldens(capsys):
    code, out, _ = run_cli(capsys, "motivic")
    assert code == 0
    report = json.loads(out)
    assert report["table"]["M2"] == [1, 3, 3, 3, 2, 3, 3, 4, 3, 1]
    assert report["euler"]["M2"] == 26
    assert report["euler"]["R"] == 10


def test_motivic_csv_and_plot(tmp_path, capsys):
    csv_path = tmp_path / "table.csv"
    plot_path = tmp_path / "table.png"
    code, _, _ = run_cli(
        capsys, "motivic", "--csv", str(csv_path), "--plot", str(plot_path)
    )
    assert code == 0
    text = csv_path.read_text().splitlines()
    assert text[0].startswith("space,euler")
    assert any(line.startswith("M2,26") for line in text)
    assert plot_path.stat().st_size > 0


def test_selftest_deterministic(capsys):
    code1, out1, _ = run_cli(capsys, "selftest", "--seed", "1", "--trials", "5")
    code2, out2, _ = run_cli(capsys, "selftest", "--seed", "1", "--trials", "5")
    assert code1 == code2 == 0
    assert out1 == out2
    report = json.loads(out1)
    assert report["status"] == "PASS"
    assert all(c["failures"] == 0 for c in report["checks"].values())


def test_selftest_zero_trials(capsys):
    code, out, _ = run_cli(capsys, "selftest", "--seed", "1", "--trials", "0")
    assert code == 0
    assert json.loads(out)["status"] == "PASS"


def test_input_and_output_files(tmp_path, capsys):
    payload = tmp_path / "pair.json"
    payload.write_text(
        json.dumps(
            {
                "quadric": [0, 1, 0, 0, 0, 0, 0, 0, -2, 0],
                "line": [[1, 0, 1, 0], [0, 2, 0, 1]],
            }
        )
    )
    out_file = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys, "psi", "--input", str(payload), "--output", str(out_file)
    )
    assert code == 0
    assert out == ""
    assert json.loads(out_file.read_text())["type"] == 1


def test_pretty_flag(capsys):
    code, out, _ = run_cli(capsys, "classify", "[[x,z],[w,y]]", "--pretty")
    assert code == 0
    assert "stratum" in out and "STABLE" in out

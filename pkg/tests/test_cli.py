import csv
import json

import numpy as np
import pytest

from qhoneyx.cli import EXIT_CERTIFICATE, EXIT_INPUT, EXIT_OK, SWEEP_COLUMNS, main
from qhoneyx.deception import feasibility_residuals, result_from_dict
from qhoneyx.hamiltonians import game_from_dict, game_to_dict, random_game, save_game
from qhoneyx.game import QuantumGame


def test_value_diagonal(capsys):
    assert main(["value", "--game", "diagonal", "--format", "json"]) == EXIT_OK
    out = json.loads(capsys.readouterr().out)
    assert abs(out["value"]) <= 1e-4 * 200
    assert out["certificate"]["passed"]


def test_value_pure_in_bracket(capsys):
    assert main(["value", "--game", "pure", "--format", "json"]) == EXIT_OK
    out = json.loads(capsys.readouterr().out)
    assert -2.5 - 27.8 <= out["value"] <= 2.5 + 27.8


def test_value_zero_file(tmp_path, capsys):
    path = tmp_path / "zero.json"
    save_game(QuantumGame(np.zeros((4, 4)), 2, 2, "zero"), path)
    assert main(["value", "--game", str(path), "--format", "json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["value"] == 0.0


def test_input_errors(tmp_path):
    assert main(["value", "--game", "nope"]) == EXIT_INPUT
    assert main(["value"]) == EXIT_INPUT
    assert main(["deceive", "--game", "pure", "--delta", "-1"]) == EXIT_INPUT
    assert main(["sweep", "--game", "pure", "--deltas", "a,b"]) == EXIT_INPUT
    assert main(["value", "--game", "pure", "--tol", "0"]) == EXIT_INPUT
    bad = tmp_path / "bad.json"
    obj = game_to_dict(random_game(rng=0))
    obj["h_im"][1] += 1.0
    bad.write_text(json.dumps(obj))
    assert main(["value", "--game", str(bad)]) == EXIT_INPUT
    (tmp_path / "junk.json").write_text("{not json")
    assert main(["value", "--game", str(tmp_path / "junk.json")]) == EXIT_INPUT


def test_deceive_zero_budget_round_trip(tmp_path, capsys):
    out = tmp_path / "d.json"
    args = ["deceive", "--game", "diagonal", "--delta", "0", "--out", str(out)]
    assert main(args) == EXIT_OK
    obj = json.loads(out.read_text())
    assert obj["d_re"] == [0.0] * 16 and obj["d_im"] == [0.0] * 16
    assert abs(obj["realized_payoff"]) <= 0.02
    res = result_from_dict(obj)
    g = game_from_dict(obj["game"])
    again = feasibility_residuals(g, res.D, res.rho_a, res.rho_b, res.omega, res.perceived_value, res.budget)
    for k, v in obj["residuals"].items():
        assert again[k] == pytest.approx(v, abs=1e-9)


def test_deceive_uses_output_dir_env(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("QHONEYX_OUTPUT_DIR", str(tmp_path / "outdir"))
    assert main(["deceive", "--game", "random:3", "--delta", "10", "--restarts", "1"]) == EXIT_OK
    files = list((tmp_path / "outdir").glob("deceive-*.json"))
    assert len(files) == 1
    obj = json.loads(files[0].read_text())
    res = result_from_dict(obj)
    g = game_from_dict(obj["game"])
    again = feasibility_residuals(g, res.D, res.rho_a, res.rho_b, res.omega, res.perceived_value, res.budget)
    for k, v in obj["residuals"].items():
        assert again[k] == pytest.approx(v, abs=1e-9)


def _read_csv(path):
    with open(path) as fh:
        return list(csv.DictReader(fh))


def test_sweep_csv_and_determinism(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["sweep", "--game", "random:5", "--deltas", "10,0,5", "--restarts", "1", "--seed", "3"]
    assert main(args + ["--out", str(a)]) == EXIT_OK
    assert main(args + ["--out", str(b)]) == EXIT_OK
    header = a.read_text().splitlines()[0]
    assert header == ",".join(SWEEP_COLUMNS)
    ra, rb = _read_csv(a), _read_csv(b)
    assert [float(r["delta"]) for r in ra] == [0.0, 5.0, 10.0]
    for x, y in zip(ra, rb):
        x.pop("wall_time_s"), y.pop("wall_time_s")
        assert x == y
    pays = [float(r["realized_payoff"]) for r in ra]
    assert all(q <= p + 1e-9 for p, q in zip(pays, pays[1:]))


def test_sweep_single_zero_matches_value(tmp_path, capsys):
    out = tmp_path / "s.json"
    assert main(["sweep", "--game", "quantum", "--deltas", "0", "--format", "json", "--out", str(out)]) == EXIT_OK
    rows = json.loads(out.read_text())
    assert len(rows) == 1
    capsys.readouterr()
    main(["value", "--game", "quantum", "--format", "json"])
    value = json.loads(capsys.readouterr().out)["value"]
    assert rows[0]["perceived_value"] == pytest.approx(value, abs=1e-3)
    assert rows[0]["realized_payoff"] == pytest.approx(value, abs=0.04)


@pytest.mark.parametrize(
    "args",
    [
        ["verify", "--game", "pure", "--delta", "20"],
        ["verify", "--game", "random:7", "--delta", "50"],
        ["verify", "--game", "diagonal", "--delta", "0"],
    ],
)
def test_verify_passes(args, capsys):
    assert main(args + ["--format", "json", "--samples", "30"]) == EXIT_OK
    out = json.loads(capsys.readouterr().out)
    assert out["passed"]
    assert out["value_gap"] == pytest.approx(float(args[-1]), abs=1e-3 * 400)


def test_certificate_exit_code_constant():
    assert EXIT_CERTIFICATE == 4

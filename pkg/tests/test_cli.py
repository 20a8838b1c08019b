import json

import numpy as np

from geomstates import cli, gellmann_basis, qubit_from_bloch, to_dual
from geomstates.serialize import operator_to_dict, state_from_dict, state_to_dict
from geomstates.realified import RealifiedState


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def op_json(a):
    return json.dumps(operator_to_dict(np.asarray(a, dtype=complex)))


def test_classify_maximally_mixed_qubit(capsys):
    code, out = run(capsys, "classify", "--json", op_json(np.eye(2) / 2))
    report = json.loads(out)
    assert code == 0
    assert report["density"] is True
    assert report["rank"] == 2
    assert report["orbit_dim"] == 0
    assert report["face_dim"] == 3


def test_classify_outside_ball(capsys):
    code, out = run(capsys, "classify", "--json",
                    op_json(qubit_from_bloch(0.0, 0.0, 0.6)))
    report = json.loads(out)
    assert code == 0
    assert report["density"] is False
    assert report["violated"] == "ball radius"


def test_classify_qutrit_maximally_mixed(capsys):
    code, out = run(capsys, "classify", "--json", op_json(np.eye(3) / 3))
    report = json.loads(out)
    assert code == 0
    assert report["rank"] == 3 and report["orbit_dim"] == 0


def test_classify_reports_dual_coordinates(capsys):
    rho = qubit_from_bloch(0.1, -0.2, 0.15)
    _, out = run(capsys, "classify", "--json", op_json(rho))
    y = np.array(json.loads(out)["y"])
    assert np.abs(y - to_dual(rho, gellmann_basis(2))).max() < 1e-15


def test_classify_from_file(tmp_path, capsys):
    path = tmp_path / "op.json"
    path.write_text(op_json(np.eye(2) / 2))
    code, out = run(capsys, "classify", "--input", str(path))
    assert code == 0 and json.loads(out)["density"] is True


def test_classify_output_file(tmp_path, capsys):
    dest = tmp_path / "report.json"
    code, _ = run(capsys, "--output", str(dest),
                  "classify", "--json", op_json(np.eye(2) / 2))
    assert code == 0
    assert json.loads(dest.read_text())["rank"] == 2


def test_usage_errors_exit_two(capsys):
    assert run(capsys, "classify")[0] == 2  # no payload source
    assert run(capsys, "classify", "--json", "{", )[0] == 2  # bad JSON
    assert run(capsys, "classify", "--json", "{}")[0] == 2  # missing keys
    assert run(capsys, "constants", "--n", "1")[0] == 2
    assert run(capsys, "ballgrid", "--resolution", "1")[0] == 2
    assert run(capsys, "nonsense")[0] == 2


def test_both_payload_sources_exit_two(tmp_path, capsys):
    path = tmp_path / "op.json"
    path.write_text(op_json(np.eye(2) / 2))
    code, _ = run(capsys, "classify", "--input", str(path),
                  "--json", op_json(np.eye(2) / 2))
    assert code == 2


def test_non_hermitian_payload_exit_two(capsys):
    payload = json.dumps({"dim": 2, "re": [[0, 1], [0, 0]],
                          "im": [[0, 0], [0, 0]]})
    assert run(capsys, "classify", "--json", payload)[0] == 2


def test_numeric_failure_exit_three(capsys, monkeypatch):
    def boom(op, tol_psd):
        raise ArithmeticError("criteria disagree")

    monkeypatch.setattr(cli, "certify_density", boom)
    code, _ = run(capsys, "classify", "--json", op_json(np.eye(2) / 2))
    assert code == 3


def test_decompose_bloch_center(capsys):
    code, out = run(capsys, "decompose", "--json", op_json(np.eye(2) / 2),
                    "--mode", "bloch", "--direction", "0,0,1")
    report = json.loads(out)
    assert code == 0
    assert np.allclose(report["weights"], [0.5, 0.5])
    assert report["residual"] < 1e-12


def test_decompose_spectral_pure_single_component(capsys):
    code, out = run(capsys, "decompose", "--json",
                    op_json(np.diag([1.0, 0.0])))
    report = json.loads(out)
    assert code == 0
    assert len(report["components"]) == 1
    assert report["weights"] == [1.0]


def test_decompose_spectral_qutrit_residual(capsys, rng):
    z = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    rho = z @ z.conj().T
    rho /= np.trace(rho).real
    code, out = run(capsys, "decompose", "--json", op_json(rho))
    assert code == 0
    assert json.loads(out)["residual"] < 1e-10


def test_decompose_bloch_requires_direction_and_qubit(capsys):
    code, _ = run(capsys, "decompose", "--json", op_json(np.eye(2) / 2),
                  "--mode", "bloch")
    assert code == 2
    code, _ = run(capsys, "decompose", "--json", op_json(np.eye(3) / 3),
                  "--mode", "bloch", "--direction", "0,0,1")
    assert code == 2


def test_decompose_rejection_is_exit_zero(capsys):
    code, out = run(capsys, "decompose", "--json",
                    op_json(qubit_from_bloch(0.4, 0.4, 0.0)))
    assert code == 0
    assert json.loads(out)["density"] is False


def test_tensors_lambda_rank_zero_at_center(capsys):
    payload = json.dumps({"dim": 2, "y": [0.5, 0, 0, 0]})
    code, out = run(capsys, "tensors", "--which", "lambda", "--json", payload)
    assert code == 0 and json.loads(out)["rank"] == 0


def test_tensors_r_rank_four_at_center(capsys):
    payload = json.dumps({"dim": 2, "y": [0.5, 0, 0, 0]})
    code, out = run(capsys, "tensors", "--which", "R", "--json", payload)
    assert code == 0 and json.loads(out)["rank"] == 4


def test_tensors_distributions_inequalities(capsys, rng):
    payload = json.dumps({"dim": 3, "y": list(rng.normal(size=9))})
    code, out = run(capsys, "tensors", "--which", "distributions",
                    "--json", payload)
    dims = json.loads(out)["dims"]
    assert code == 0
    assert dims["D0"] <= min(dims["lambda"], dims["R"])
    assert dims["D1"] <= min(9, dims["lambda"] + dims["R"])


def test_constants_qutrit_rows(capsys):
    code, out = run(capsys, "constants", "--n", "3")
    lines = out.strip().split("\n")
    assert code == 0
    assert lines[0] == "mu,nu,rho,C,d,check"
    assert "1,2,3,1,0,match" in lines
    assert "8,8,8,0,-0.57735026919,match" in lines
    assert not any(line.endswith(",mismatch") for line in lines)
    assert any(line.endswith(",reported") for line in lines)


def test_constants_qubit_rows(capsys):
    code, out = run(capsys, "constants", "--n", "2")
    lines = out.strip().split("\n")
    assert code == 0
    assert lines[0] == "mu,nu,rho,C,d"
    assert "1,2,3,1,0" in lines


def test_flow_hamiltonian_drift(tmp_path, capsys):
    trace = tmp_path / "trace.csv"
    payload = json.dumps({
        "A": operator_to_dict(np.diag([1.0, -1.0]).astype(complex)),
        "psi0": state_to_dict(RealifiedState([0.6, 0.8], [0.0, 0.0])),
    })
    code, out = run(capsys, "flow", "--mode", "hamiltonian",
                    "--t-final", "10.0", "--step", "1e-3",
                    "--trace", str(trace), "--json", payload)
    report = json.loads(out)
    assert code == 0
    assert report["norm_drift"] < 1e-8
    assert report["e_A_drift"] < 1e-8
    lines = trace.read_text().strip().split("\n")
    assert lines[0] == "t,e_A,norm"
    assert len(lines) > 100


def test_flow_eigensolve_descent(capsys):
    payload = json.dumps(
        {"A": operator_to_dict(np.diag([1.0, -1.0]).astype(complex))})
    code, out = run(capsys, "flow", "--mode", "gradient-eigensolve",
                    "--opt-mode", "descent", "--json", payload)
    report = json.loads(out)
    assert code == 0 and report["converged"]
    assert abs(report["eigenvalue"] + 1.0) < 1e-8
    # result state round-trips through the state parser
    psi = state_from_dict(report["state"])
    assert abs(psi.norm() - 1.0) < 1e-8


def test_flow_eigensolve_identity_trace(tmp_path, capsys):
    trace = tmp_path / "trace.csv"
    payload = json.dumps({"A": operator_to_dict(np.eye(3).astype(complex))})
    code, out = run(capsys, "flow", "--mode", "gradient-eigensolve",
                    "--trace", str(trace), "--json", payload)
    report = json.loads(out)
    assert code == 0 and report["converged"]
    assert abs(report["eigenvalue"] - 1.0) < 1e-12
    lines = trace.read_text().strip().split("\n")
    assert lines[0] == "iter,e_A,residual" and lines[1].startswith("0,")


def test_flow_non_convergence_is_exit_zero(capsys, rng):
    payload = json.dumps(
        {"A": operator_to_dict(np.diag([1.0, -1.0]).astype(complex))})
    code, out = run(capsys, "--seed", "3", "flow",
                    "--mode", "gradient-eigensolve",
                    "--max-iter", "1", "--json", payload)
    assert code == 0
    assert json.loads(out)["converged"] is False


def test_flow_seed_determinism(capsys):
    payload = json.dumps(
        {"A": operator_to_dict(np.diag([1.0, -1.0]).astype(complex))})
    argv = ["--seed", "7", "flow", "--mode", "gradient-eigensolve",
            "--json", payload]
    _, first = run(capsys, *argv)
    _, second = run(capsys, *argv)
    assert first == second  # byte-identical


def test_ballgrid_points(tmp_path, capsys):
    dest = tmp_path / "grid.csv"
    code, _ = run(capsys, "--output", str(dest),
                  "ballgrid", "--resolution", "13")
    assert code == 0
    rows = {}
    lines = dest.read_text().strip().split("\n")
    assert lines[0] == "y1,y2,y3,is_density,rank"
    assert len(lines) == 1 + 13 ** 3
    for line in lines[1:]:
        y1, y2, y3, ok, rank = line.split(",")
        rows[(float(y1), float(y2), float(y3))] = (int(ok), int(rank))
    assert rows[(0.0, 0.0, 0.0)] == (1, 2)
    assert rows[(0.0, 0.0, 0.5)] == (1, 1)  # boundary pure state
    assert rows[(0.4, 0.4, 0.0)][0] == 0  # radius 0.32 > 0.25


def test_ballgrid_determinism(capsys):
    _, first = run(capsys, "ballgrid", "--resolution", "5")
    _, second = run(capsys, "ballgrid", "--resolution", "5")
    assert first == second


def test_console_entry_point_exists():
    import importlib.metadata as md
    eps = md.entry_points(group="console_scripts")
    assert any(ep.name == "geomstates" for ep in eps)

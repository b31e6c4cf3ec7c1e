import io
import json
import os
import subprocess
import sys

import pytest

from genusone.cli import main

SRC = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src")


def run(capsys, monkeypatch, argv, payload=None, cache=None):
    if payload is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(payload)))
    code = main(["--cache-dir", cache] + argv if cache else argv)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_bq_invariants(capsys, monkeypatch, cache_dir):
    code, out = run(capsys, monkeypatch, ["invariants", "--space", "bq"], {"coeffs": [0, 1, 0, 1, 0]}, cache_dir)
    assert code == 0 and out == {"I": "-3", "J": "0", "Delta": "-108"}


def test_unknown_verb(capsys, monkeypatch):
    assert run(capsys, monkeypatch, ["frobnicate"])[0] == 3
    assert run(capsys, monkeypatch, [])[0] == 3


def test_bad_json(capsys, monkeypatch, cache_dir):
    monkeypatch.setattr(sys, "stdin", io.StringIO("{not json"))
    assert main(["--cache-dir", cache_dir, "invariants", "--space", "bq"]) == 3
    code, _ = run(capsys, monkeypatch, ["invariants", "--space", "bq"], {"coeffs": [1, 2]}, cache_dir)
    assert code == 3


def test_degenerate_exit(capsys, monkeypatch, cache_dir):
    zero = {"shape": [2, 2, 2, 2], "entries": ["0"] * 16}
    assert run(capsys, monkeypatch, ["invariants", "--space", "hc"], zero, cache_dir)[0] == 2
    assert run(capsys, monkeypatch, ["construct", "--space", "rc"], {"c6": 0, "c9": 0, "c12": 0}, cache_dir)[0] == 2


def test_rc_round_trip(capsys, monkeypatch, cache_dir):
    code, T = run(capsys, monkeypatch, ["construct", "--space", "rc"], {"c6": 0, "c9": 1, "c12": 0}, cache_dir)
    assert code == 0 and T["shape"] == [3, 3, 3]
    code, jac = run(capsys, monkeypatch, ["jacobian", "--space", "rc"], T, cache_dir)
    a1, a2, a3, a4, a6 = jac["curve"]["a"]
    assert (a1, a2, a4, a6) == ("0", "0", "0", "0") and a3 != "0"
    assert jac["points"] == [{"x": "0", "y": "0"}]


def test_hc_construct_and_chase(capsys, monkeypatch, cache_dir):
    target = {"curve": {"a": ["0", "0", "0", "-25", "0"]}, "P": {"x": "-4", "y": "6"}, "Q": {"x": "0", "y": "0"}}
    code, H = run(capsys, monkeypatch, ["construct", "--space", "hc"], target, cache_dir)
    assert code == 0
    code, jac = run(capsys, monkeypatch, ["jacobian", "--space", "hc"], H, cache_dir)
    assert code == 0 and len(jac["points"]) == 3
    from genusone.elliptic import CurvePoint, WeierstrassCurve
    from genusone.hypercube import hc_curve_point

    E = WeierstrassCurve(0, 0, 0, -25, 0)
    start = hc_curve_point(E, CurvePoint.affine(-4, 6), CurvePoint.affine(0, 0), CurvePoint.affine(-5, 0))
    payload = {"tensor": H, "start": [[str(c) for c in v] for v in start], "moves": []}
    code, base = run(capsys, monkeypatch, ["chase", "--space", "hc"], payload, cache_dir)
    assert code == 0 and base["curve"] == "123"
    code, back = run(capsys, monkeypatch, ["chase", "--space", "hc", "--moves", "134,124,123,134,124,123"], payload, cache_dir)
    assert back == base


def test_tensor_verbs(capsys, monkeypatch, cache_dir):
    code, T = run(capsys, monkeypatch, ["embed", "--kind", "bq"], [1, 0, 0, 0, 1], cache_dir)
    assert code == 0 and T["symmetry"] == "full-sym"
    code, S = run(capsys, monkeypatch, ["slice", "--axis", "1", "--index", "2"], T, cache_dir)
    assert S["shape"] == [2, 2, 2] and S["entries"][-1] == "1"
    assert run(capsys, monkeypatch, ["slice", "--axis", "5", "--index", "1"], T, cache_dir)[0] == 3
    code, A = run(capsys, monkeypatch, ["act"], {"tensor": T, "matrices": [[1, [[1, 1], [0, 1]]]]}, cache_dir)
    assert code == 0 and A["entries"][:2] == ["1", "0"]
    code, K = run(capsys, monkeypatch, ["skew-embed", "--kind", "2,2"], T, cache_dir)
    assert K["shape"] == [2, 2, 4, 4]
    code, h = run(capsys, monkeypatch, ["hessian", "--space", "bq"], [1, 0, 0, 0, 1], cache_dir)
    assert h == {"coeffs": ["0", "0", "331776", "0", "0"]}


def test_fts_and_quadrics(capsys, monkeypatch, cache_dir):
    eps = {"algebra": "K3", "a": "1", "b": ["0", "0", "0"], "c": ["0", "0", "0"], "d": "1"}
    code, out = run(capsys, monkeypatch, ["invariants", "--space", "fts"], eps, cache_dir)
    assert code == 0 and out["disc"] == "1" and out["rank"] == 4
    bad = dict(eps, algebra="H3(nothing)")
    assert run(capsys, monkeypatch, ["invariants", "--space", "fts"], bad, cache_dir)[0] == 3
    ident = [[int(i == j) for j in range(4)] for i in range(4)]
    diag = [[(i + 1) * int(i == j) for j in range(4)] for i in range(4)]
    code, out = run(capsys, monkeypatch, ["invariants", "--space", "quadrics"], {"A": ident, "B": diag}, cache_dir)
    assert (out["d8"], out["d12"]) == ("13", "-70")


def test_derive_and_calibrate(capsys, monkeypatch, cache_dir):
    code, out = run(capsys, monkeypatch, ["derive", "--rep", "tc", "--degree", "4"], None, cache_dir)
    assert code == 0 and out["dimension"] == 1 and out["basis"].startswith("G1INV v1")
    assert any(name.endswith(".g1inv") for name in os.listdir(cache_dir))
    code, cal = run(capsys, monkeypatch, ["calibrate"], None, cache_dir)
    assert code == 0 and cal["alpha"] == "1"


def test_verify_verb(capsys, monkeypatch, cache_dir):
    code, out = run(capsys, monkeypatch, ["verify", "3", "--samples", "5"], None, cache_dir)
    assert code == 0 and out["all_passed"] and out["criteria"][0]["criterion"] == 3
    assert run(capsys, monkeypatch, ["verify", "12"], None, cache_dir)[0] == 3


@pytest.mark.parametrize("space", ["bq", "tc", "f22", "cube", "hc", "rc", "quadrics", "fts"])
def test_random_is_deterministic(capsys, monkeypatch, cache_dir, space):
    first = run(capsys, monkeypatch, ["random", "--space", space, "--seed", "11"], None, cache_dir)
    second = run(capsys, monkeypatch, ["--seed", "11", "random", "--space", space], None, cache_dir)
    assert first == second and first[0] == 0


def test_byte_identical_output(tmp_path):
    env = dict(os.environ, PYTHONPATH=SRC)
    cmd = [sys.executable, "-m", "genusone.cli", "--cache-dir", str(tmp_path), "random", "--space", "rc", "--seed", "4"]
    outs = [subprocess.run(cmd, capture_output=True, env=env, check=True).stdout for _ in range(2)]
    assert outs[0] == outs[1]
    inv = [sys.executable, "-m", "genusone.cli", "--cache-dir", str(tmp_path), "invariants", "--space", "rc"]
    res = [subprocess.run(inv, input=outs[0], capture_output=True, env=env) for _ in range(2)]
    assert res[0].returncode in (0, 2) and res[0].stdout == res[1].stdout

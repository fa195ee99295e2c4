import os
import subprocess
import sys

import pytest

from hypercut.cli import main

FIG7 = """\
n 6
r 4
s 0
t 5
w 0,1,3
hyperedge 0 1 2 3 1
hyperedge 1 2 4 5 1
edge 0 3 6
edge 4 5 6
edge 1 2 6
"""


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_exit_codes(capsys):
    assert run(capsys, "classify", "--w", "0,1,1.5")[:2] == (0, "Submodular\n")
    assert run(capsys, "classify", "--w", "0,0,5")[:2] == (1, "Degenerate\n")
    assert run(capsys, "classify", "--w", "0,1,2,4")[:2] == (2, "NonSubmodularHard (2w_2 < w_1 + w_3)\n")


def test_project(capsys):
    code, out, _ = run(capsys, "project", "--w", "0,1,0.5")
    assert code == 0 and "w_hat 0,1,1\n" in out and "rho 2\n" in out
    code, out, _ = run(capsys, "project", "--w", "0,1,1.5")
    assert "w_hat 0,1,3/2\n" in out and "rho 1\n" in out
    code, out, _ = run(capsys, "project", "--w", "0,1,3", "--method", "l1", "--json")
    assert '"rho": "3/2"' in out and '"w_prime": "0,1,2"' in out


def test_solve(tmp_path, capsys):
    path = tmp_path / "fig7.hg"
    path.write_text(FIG7)
    code, out, _ = run(capsys, "solve", str(path), "--mode", "brute")
    assert code == 0 and "value 3\n" in out
    code, out, _ = run(capsys, "solve", str(path), "--out", str(tmp_path / "o"))
    assert "method approx" in out and "certificate " in out and "≤ 3/2 · OPT" in out
    assert (tmp_path / "o" / "solution.txt").read_text() == out
    code, _, err = run(capsys, "solve", str(path), "--mode", "flow")
    assert code == 4 and "NonSubmodularHard" in err


def test_gap(capsys, tmp_path):
    code, out, _ = run(capsys, "gap", "--kind", "w2_small", "--w2", "1/2")
    assert out.splitlines()[0] == "OPT=1 LP=1/2 gap=2"
    code, out, _ = run(capsys, "gap", "--kind", "w2_large", "--w2", "3", "--out", str(tmp_path))
    assert out.splitlines()[0] == "OPT=3 LP=2 gap=3/2"
    assert (tmp_path / "w2_large.lp").exists()
    code, _, _ = run(capsys, "gap", "--kind", "w2_large", "--w2", "1")
    assert code == 3


def test_reduce_maxcut(tmp_path, capsys):
    g = tmp_path / "tri.txt"
    g.write_text("n 3\n0 1\n1 2\n0 2\n")
    code, out, _ = run(capsys, "reduce-maxcut", str(g), "--regime", "w2_lt_1", "--w2", "1/2",
                       "--verify", "--out", str(tmp_path))
    assert code == 0 and "expected=2 min_cut=2" in out


def test_lp_and_generate(tmp_path, capsys):
    code, out, _ = run(capsys, "generate", "--seed", "4", "--n", "7", "--r", "4", "--out", str(tmp_path))
    assert code == 0
    inst = tmp_path / "instance_4.hg"
    code, out, _ = run(capsys, "lp", str(inst), "--out", str(tmp_path))
    assert code == 0 and out.startswith("variables") and "gap=" in out
    assert (tmp_path / "model.lp").exists()
    code, out, _ = run(capsys, "generate", "--seed", "4", "--n", "7", "--r", "4")
    assert out == inst.read_text()


def test_generate_is_deterministic(capsys):
    main(["generate", "--seed", "9"])
    a = capsys.readouterr().out
    main(["generate", "--seed", "9"])
    assert capsys.readouterr().out == a


def test_apx_bound(capsys):
    code, out, _ = run(capsys, "apx-bound", "--w2", "3")
    assert "apx_lower_bound 86/85" in out
    code, out, _ = run(capsys, "apx-bound", "--w2", "1.5")
    assert "apx_lower_bound none" in out


def test_heatmap(tmp_path, capsys):
    code, out, _ = run(capsys, "heatmap", "--r", "6", "--w2", "0.5:3:0.5", "--w3", "0.5:3:0.5",
                       "--out", str(tmp_path))
    assert code == 0
    files = os.listdir(tmp_path)
    assert len([f for f in files if f.endswith(".csv")]) == 10
    assert len([f for f in files if f.endswith(".ppm")]) == 10


def test_usage_and_parse_errors(tmp_path, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["classify"])
    assert exc.value.code == 3
    assert run(capsys, "classify", "--w", "0,x")[0] == 3
    bad = tmp_path / "bad.hg"
    bad.write_text("n 3\nr 2\ns 0\nt 2\nedge 0 7 1\n")
    code, _, err = run(capsys, "solve", str(bad))
    assert code == 3 and "line 5" in err
    assert run(capsys, "solve", str(tmp_path / "missing.hg"))[0] == 3


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "hypercut.cli", "classify", "--w", "0,1,2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "Submodular\n"

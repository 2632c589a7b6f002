"""Command-line interface: exit codes, deterministic output, manifests."""
import subprocess
import sys

import pytest

from maxmaxflow.cli import main
from maxmaxflow.graph import WeightedMultigraph, cycle_graph

TRIANGLE = "v 3\ne 1 2 1\ne 2 3 1\ne 3 1 1\n"


@pytest.fixture
def tri(tmp_path):
    p = tmp_path / "tri.txt"
    p.write_text(TRIANGLE)
    return str(p)


def run_main(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_lambda(tri, capsys):
    code, out, _ = run_main(["lambda", tri], capsys)
    assert code == 0
    assert "2" in out


def test_invariants_csv(tri, capsys):
    code, out, _ = run_main(["invariants", tri], capsys)
    assert code == 0
    assert "Lambda" in out and "Delta" in out


def test_ghtree_roundtrips_and_manifest(tri, capsys):
    code, out, _ = run_main(["ghtree", tri], capsys)
    assert code == 0
    assert out.startswith("# maxmaxflow")
    body = "\n".join(l for l in out.splitlines() if not l.startswith("#"))
    # tree output: n-1 edges for a connected graph, each tree edge weight is
    # the max-flow between its ends
    assert body.count("e ") == 2


def test_count_series(tri, capsys):
    code, out, _ = run_main(["count", tri, "--class", "SAW", "--x", "1", "--y", "2", "-m", "3"], capsys)
    assert code == 0
    assert "1" in out


def test_verify_consistent_exit_zero(tri, capsys):
    code, out, _ = run_main(
        ["verify", tri, "--bound", "prop4.3", "--x", "1", "--y", "2", "-m", "4"], capsys
    )
    assert code == 0
    assert "CONSISTENT" in out or "EQUALITY" in out


def test_suite(tri, capsys):
    code, out, _ = run_main(
        ["suite", tri, "--x", "1,2", "--y", "3", "-m", "3"], capsys
    )
    assert code == 0
    assert "prop4.3" in out


def test_hunt_deterministic_output(capsys):
    args = ["hunt", "--conjecture", "conj5.6", "--trials", "25", "--seed", "3"]
    code1, out1, _ = run_main(args, capsys)
    code2, out2, _ = run_main(args, capsys)
    assert code1 == code2 == 0
    strip = lambda s: [l for l in s.splitlines() if not l.startswith("# command")]
    assert strip(out1) == strip(out2)
    assert "# seed: 3" in out1
    assert "conj5.6" in out1


def test_hunt_jobs_flag_no_effect(capsys):
    base = ["hunt", "--conjecture", "conj5.7", "--trials", "15", "--seed", "1"]
    _, out1, _ = run_main(base, capsys)
    _, out2, _ = run_main(base + ["--jobs", "4"], capsys)
    strip = lambda s: [l for l in s.splitlines() if not l.startswith("# command")]
    assert strip(out1) == strip(out2)


def test_chromatic(tri, capsys):
    code, out, _ = run_main(["chromatic", tri], capsys)
    assert code == 0
    # q(q-1)(q-2) = q^3 - 3q^2 + 2q
    assert "-3" in out and "2" in out


def test_generate_cycle(capsys):
    code, out, _ = run_main(["generate", "--family", "cycle", "--n", "5"], capsys)
    assert code == 0
    g = WeightedMultigraph.parse(out)
    assert g == cycle_graph(5)


def test_generate_to_file(tmp_path, capsys):
    dest = tmp_path / "g.txt"
    code, _, _ = run_main(["generate", "--family", "path", "--n", "4", "-o", str(dest)], capsys)
    assert code == 0
    assert WeightedMultigraph.parse(dest.read_text()).n == 4


def test_bad_graph_file_exit_one(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("v 2\ne 1 1 1\n")
    code, _, err = run_main(["lambda", str(p)], capsys)
    assert code == 1
    assert "error" in err


def test_missing_file_exit_one(capsys):
    code, _, err = run_main(["lambda", "/nonexistent/file.txt"], capsys)
    assert code == 1


def test_usage_error_exit_one(tri):
    # argparse errors are mapped to exit code 1
    proc = subprocess.run(
        [sys.executable, "-m", "maxmaxflow.cli", "verify", tri, "-m", "3"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 1


def test_stdin_input(tri, monkeypatch, capsys):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO(TRIANGLE))
    code, out, _ = run_main(["lambda", "-"], capsys)
    assert code == 0

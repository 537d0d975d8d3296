from __future__ import annotations

import csv
import io
import subprocess
import sys
from pathlib import Path

import pytest

from graphkit.cli import main

DATA = Path(__file__).parent / "data"


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_run_dfs(capsys):
    code, out, _ = run(["run", "--algo", "dfs", "--input", str(DATA / "dfs_example.el")], capsys)
    assert code == 0 and out.split() == ["0", "1", "3", "4", "5", "2"]


def test_trace_dfs_golden(capsys):
    code, out, _ = run(["trace", "--algo", "dfs", "--input", str(DATA / "dfs_example.el"),
                        "--edge-labels", "acdefb"], capsys)
    assert code == 0 and out == (DATA / "dfs_trace.golden").read_text()


def test_edge_label_count_mismatch(capsys):
    code, _, err = run(["trace", "--algo", "dfs", "--input", str(DATA / "dfs_example.el"),
                        "--edge-labels", "abc"], capsys)
    assert code == 1 and "edge labels" in err


def test_run_matching_petersen(capsys):
    code, out, _ = run(["run", "--algo", "matching", "--input", str(DATA / "petersen.el")], capsys)
    lines = out.splitlines()
    assert code == 0 and lines[0] == "5" and len(lines) == 6


def test_run_scc_and_topo_generated(capsys):
    code, out, _ = run(["run", "--algo", "scc", "--n", "30", "--m", "60", "--seed", "3"], capsys)
    assert code == 0 and len(out.split()) == 30


def test_topo_on_cycle_fails(capsys):
    code, _, err = run(["run", "--algo", "topo", "--input", str(DATA / "dfs_example.el")], capsys)
    assert code == 1 and "cycle" in err


def test_dijkstra_complete(capsys):
    code, out, err = run(["run", "--algo", "dijkstra", "--backend", "complete", "--n", "50"], capsys)
    assert code == 0 and out.split() == [str(v) for v in range(50)]
    assert "edge records allocated: 0" in err


def test_backends_agree(capsys, tmp_path):
    outs = []
    for backend in ("adjlist", "compact"):
        for algo in ("bfs", "dfs", "scc", "dijkstra"):
            code, out, _ = run(["run", "--algo", algo, "--backend", backend,
                                "--n", "40", "--m", "120", "--seed", "7"], capsys)
            assert code == 0
            outs.append(out)
    assert outs[:4] == outs[4:]


def test_output_file(capsys, tmp_path):
    dest = tmp_path / "o.txt"
    code, out, _ = run(["run", "--algo", "bfs", "--input", str(DATA / "dfs_example.el"),
                        "--output", str(dest)], capsys)
    assert code == 0 and out == "" and dest.read_text().split() == ["0", "1", "2", "3", "4", "5"]


def test_gen_round_trips(capsys, tmp_path):
    code, out, _ = run(["gen", "--n", "10", "--m", "25", "--seed", "4"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "10 25 directed" and len(lines) == 26
    p = tmp_path / "g.el"
    p.write_text(out)
    code, _, _ = run(["run", "--algo", "dijkstra", "--input", str(p)], capsys)
    assert code == 0


@pytest.mark.parametrize("argv", [
    ["run", "--algo", "bfs"],
    ["run", "--algo", "bfs", "--input", "/nonexistent.el"],
    ["run", "--algo", "bfs", "--n", "3", "--m", "1", "--source", "9"],
    ["run", "--algo", "dijkstra", "--backend", "complete"],
    ["gen", "--n", "3", "--m", "10"],
    ["bench", "--sizes", "ten"],
])
def test_bad_input_exits_1(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 1 and err


def test_usage_errors_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["run", "--algo", "nope"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 1


def test_trace_other_algorithms(capsys):
    for algo in ("bfs", "scc", "dijkstra", "matching"):
        code, out, _ = run(["trace", "--algo", algo, "--input", str(DATA / "petersen.el")], capsys)
        assert code == 0 and out.splitlines()[0].startswith("0\t")


def test_bench_small_grid(capsys):
    code, out, err = run(["bench", "--n", "60", "--sizes", "200,400", "--repeat", "1",
                          "--algo", "bfs", "--algo", "dijkstra"], capsys)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 6
    assert all(r["equal"] == "true" for r in rows)
    assert "all results equal" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "graphkit", "run", "--algo", "bfs",
                           "--input", str(DATA / "dfs_example.el")], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.split()[0] == "0"

import hashlib
import subprocess
import sys

import pytest

from twovcss import io
from twovcss.cli import main
from twovcss.errors import ParseError
from twovcss.graph import complete_graph, cycle_graph, is_2vc, petersen_graph

GEN_RANDOM_8_1 = "a55be0cf47c6f5e196ff0ed8ad15c3de11238f691f7d81868c50a65e12dc6a9f"


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def graph_file(tmp_path, name, g):
    return write(tmp_path, name, io.format_graph(g))


def comments(out):
    return dict(line[2:].split("=", 1) for line in out.splitlines()
                if line.startswith("# ") and "=" in line and " " not in line[2:].split("=", 1)[0])


# --- parsing ----------------------------------------------------------------

@pytest.mark.parametrize("text, where", [
    ("", "missing 'n m' header"),
    ("3 2\n0 1\n", "announces 2 edges"),
    ("3 1\n0 x\n", "<input>:2:"),
    ("3 1\n1 1\n", "<input>:2: self-loop"),
    ("3 1\n2 1\n", "<input>:2: need 0 <= u < v"),
    ("3 2\n0 1\n# c\n0 1\n", "<input>:4: duplicate"),
    ("0 0\n", "<input>:1: bad header"),
    ("3 1\n0 1 2\n", "<input>:2: expected two integers"),
])
def test_parse_errors(text, where):
    with pytest.raises(ParseError) as exc:
        io.parse_graph(text)
    assert where in str(exc.value)


def test_round_trip_and_comments():
    g = petersen_graph()
    text = io.format_graph(g, ["petersen"])
    assert text.startswith("# petersen\n10 15\n")
    assert io.parse_graph(text).edges == g.edges


def test_solution_must_fit_graph():
    g = cycle_graph(4)
    with pytest.raises(ParseError):
        io.parse_solution("5 0\n", g)
    with pytest.raises(ParseError):
        io.parse_solution("4 1\n0 2\n", g)


def test_dot_styles():
    g = cycle_graph(4)
    dot = io.to_dot(g, [(0, 1), (1, 2)], [(2, 3)])
    assert "0 -- 1 [style=solid]" in dot
    assert "2 -- 3 [style=dashed]" in dot
    assert '0 -- 3 [style=dotted color="grey"]' in dot


# --- verify -------------------------------------------------------------------

def test_verify(tmp_path, capsys):
    c6 = graph_file(tmp_path, "c6.txt", cycle_graph(6))
    assert main(["verify", c6, c6]) == 0
    assert capsys.readouterr().out.startswith("pass: 6 edges")
    path = write(tmp_path, "path.txt", io.format_edges(6, sorted(cycle_graph(6).edges)[1:]))
    assert main(["verify", c6, path]) == 1
    assert "not 2-vertex-connected" in capsys.readouterr().out
    k4 = graph_file(tmp_path, "k4.txt", complete_graph(4))
    tri = write(tmp_path, "tri.txt", "4 3\n0 1\n1 2\n0 2\n")
    assert main(["verify", k4, tri]) == 1
    assert "not spanning" in capsys.readouterr().out


def test_verify_rejects_foreign_edges(tmp_path, capsys):
    c6 = graph_file(tmp_path, "c6.txt", cycle_graph(6))
    bad = write(tmp_path, "bad.txt", "6 1\n0 3\n")
    assert main(["verify", c6, bad]) == 2
    assert "edges not in the graph" in capsys.readouterr().err


# --- gen / solve / oracle -------------------------------------------------------

def test_gen_golden(tmp_path, capsys):
    assert main(["gen", "random-2vc", "8", "--seed", "1"]) == 0
    out = capsys.readouterr().out
    assert hashlib.sha256(out.encode()).hexdigest() == GEN_RANDOM_8_1
    g = io.parse_graph(out)
    assert g.n == 8 and g.m == 13 and is_2vc(g)


def test_solve_golden_trace(tmp_path, capsys):
    main(["gen", "random-2vc", "8", "--seed", "1"])
    path = write(tmp_path, "g.txt", capsys.readouterr().out)
    assert main(["solve", path, "--trace"]) == 0
    out = capsys.readouterr().out
    assert "# move=leaf-1.1 added=2 removed=2 cost_before=32/3 cost_after=10/1" in out
    rep = comments(out)
    assert (rep["H"], rep["guarantee"]) == ("8 S=8", "pass")
    assert rep["trace_sha256"].startswith("683b3d22")
    s = io.parse_solution(out, io.parse_graph(open(path).read()))
    assert len(s) == 8 and is_2vc(s)


def test_solve_cycle(tmp_path, capsys):
    c5 = graph_file(tmp_path, "c5.txt", cycle_graph(5))
    out_file = tmp_path / "sol.txt"
    assert main(["solve", c5, "-o", str(out_file), "--oracle"]) == 0
    rep = comments(capsys.readouterr().out)
    assert rep["ratio_S_opt"] == "1/1 (1.0000)"
    assert out_file.read_text() == io.format_graph(cycle_graph(5))


def test_solve_dot(tmp_path, capsys):
    k4 = graph_file(tmp_path, "k4.txt", complete_graph(4))
    dot = tmp_path / "k4.dot"
    assert main(["solve", k4, "--dot", str(dot)]) == 0
    text = dot.read_text()
    assert text.startswith("graph G {") and text.count("style=solid") == 4


@pytest.mark.parametrize("g, expect", [(complete_graph(4), 4), (cycle_graph(7), 7)])
def test_oracle(tmp_path, capsys, g, expect):
    path = graph_file(tmp_path, "g.txt", g)
    assert main(["oracle", path]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert f"opt={expect}" in lines and "guarantee=pass" in lines


def test_oracle_random_golden(tmp_path, capsys):
    main(["gen", "random-2vc", "8", "--seed", "2"])
    path = write(tmp_path, "g.txt", capsys.readouterr().out)
    assert main(["oracle", path]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert "H=9 S=9" in lines and "opt=9" in lines


def test_oracle_budget(tmp_path, capsys):
    path = graph_file(tmp_path, "p.txt", petersen_graph())
    assert main(["oracle", path, "--max-vertices", "6"]) == 5


def test_petersen_report(tmp_path, capsys):
    path = graph_file(tmp_path, "p.txt", petersen_graph())
    assert main(["solve", path, "--seed", "7"]) == 0
    rep = comments(capsys.readouterr().out)
    assert rep["H"] == "10 S=11"
    assert rep["seed"] == "7"
    assert "wall_s" not in rep


def test_batch(tmp_path, capsys):
    d = tmp_path / "batch"
    d.mkdir()
    for k in (5, 6, 7):
        (d / f"c{k}.txt").write_text(io.format_graph(cycle_graph(k)))
    (d / "bad.txt").write_text(io.format_graph(petersen_graph().without_edges([(0, 1)]).without_edges([(0, 4)])))
    assert main(["solve", "--batch", str(d), "--jobs", "2"]) == 3
    out = capsys.readouterr().out
    assert out.count("guarantee=pass") == 3
    assert "error=NotTwoVCError" in out
    assert (d / "c7.txt.sol").read_text() == io.format_graph(cycle_graph(7))


def test_exit_codes(tmp_path, capsys):
    assert main(["solve", str(tmp_path / "missing.txt")]) == 2
    garbage = write(tmp_path, "x.txt", "2 1\n0 5\n")
    assert main(["solve", garbage]) == 2
    assert ":2:" in capsys.readouterr().err
    path = write(tmp_path, "p.txt", "4 3\n0 1\n1 2\n2 3\n")
    assert main(["solve", path]) == 3
    with pytest.raises(SystemExit):
        main(["solve"])


def test_module_entry_point(tmp_path):
    path = graph_file(tmp_path, "c4.txt", cycle_graph(4))
    out = subprocess.run([sys.executable, "-m", "twovcss", "solve", path], capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout.startswith("4 4\n")

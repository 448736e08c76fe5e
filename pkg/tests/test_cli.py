import json

import pytest
from hypothesis import given

from conftest import digraphs
from maxline import Digraph, emit, from_arcs, gen_o, parse_edge_list
from maxline.cli import main
from maxline.errors import DuplicateArc, LoopArc, ParseError


def test_parse_examples():
    assert parse_edge_list("0 1\n1 0\n") == from_arcs(2, [(0, 1), (1, 0)])
    G = parse_edge_list("# comment\nn 3\n0 1\n")
    assert G.n == 3 and G.arcs == ((0, 1),)
    assert parse_edge_list("") == Digraph(0)
    assert parse_edge_list("\n  0 2  # trailing\n\n") == Digraph(3, [(0, 2)])


def test_parse_errors():
    with pytest.raises(LoopArc, match="line 1"):
        parse_edge_list("0 0\n")
    with pytest.raises(DuplicateArc, match="line 3"):
        parse_edge_list("0 1\n1 2\n0 1\n")
    with pytest.raises(ParseError) as info:
        parse_edge_list("0 1\nfoo bar\n")
    assert info.value.line == 2
    with pytest.raises(ParseError):
        parse_edge_list("n 2\n0 5\n")
    with pytest.raises(ParseError):
        parse_edge_list("0 1 2\n")
    with pytest.raises(ParseError):
        parse_edge_list("0 1\nn 4\n")


@given(digraphs())
def test_edges_roundtrip(G):
    text = emit(G, "edges")
    assert parse_edge_list(text) == G
    assert emit(parse_edge_list(text), "edges") == text


def test_normalizes_input():
    assert emit(parse_edge_list("1 0\n0 1\n"), "edges") == "n 2\n0 1\n1 0\n"


def test_dot_output():
    dot = emit(gen_o(12), "dot")
    assert dot.startswith("digraph G {")
    assert dot.count("->") == 12
    assert sum(1 for line in dot.splitlines() if line.strip().rstrip(";").isdigit()) == 7
    assert emit(Digraph(1), "dot") == "digraph G {\n  0;\n}\n"


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_cli_gen_and_phi(capsys, write):
    code, out = run(capsys, "gen", "o", "11", "--transpose")
    assert code == 0
    path = write("o11t.txt", out.out)
    assert run(capsys, "phi", path)[1].out.strip() == "35"
    assert run(capsys, "max-arcs", "12")[1].out.strip() == "42"
    code, out = run(capsys, "gen", "star", "3", "2", "2")
    assert parse_edge_list(out.out).m == 5
    code, out = run(capsys, "gen", "extremal-line", "7")
    assert parse_edge_list(out.out).m == 15
    code, out = run(capsys, "gen", "o", "12", "--format", "dot")
    assert out.out.count("->") == 12


def test_cli_line_has_label_table(capsys, write):
    path = write("path.txt", "0 1\n1 2\n")
    code, out = run(capsys, "line", path)
    assert code == 0
    assert "# 0 = 0 1" in out.out and "# 1 = 1 2" in out.out
    assert parse_edge_list(out.out) == Digraph(2, [(0, 1)])


def test_cli_check_exit_codes(capsys, write):
    eight = write("eight.txt", "0 1\n1 0\n0 2\n2 0\n")
    code, out = run(capsys, "check", eight, "--witness")
    assert code == 1
    assert "Eight 0 1 2" in out.out
    ok = write("ok.txt", emit(from_arcs(2, [(0, 1), (1, 0)])))
    assert run(capsys, "check", ok)[0] == 0


def test_cli_root_and_iso(capsys, write):
    code, out = run(capsys, "gen", "extremal-line", "6")
    line = write("line.txt", out.out)
    code, out = run(capsys, "root", line)
    assert code == 0
    root = write("root.txt", out.out)
    o6 = write("o6.txt", emit(gen_o(6)))
    assert run(capsys, "iso", root, o6)[0] == 0
    o6t = write("o7.txt", emit(gen_o(7)))
    assert run(capsys, "iso", root, o6t)[0] == 1
    eight = write("eight.txt", "0 1\n1 0\n0 2\n2 0\n")
    code, out = run(capsys, "root", eight)
    assert code == 2 and "Eight" in out.err


def test_cli_usage_and_parse_errors(capsys, write):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "phi", write("bad.txt", "0 0\n"))[0] == 2
    assert run(capsys, "phi", "/nonexistent/file")[0] == 2
    assert run(capsys, "gen", "o", "1")[0] == 2


def test_cli_verify_report(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, out = run(capsys, "verify", "max", "5", "--mode", "bnb", "--report", str(report))
    assert code == 0
    data = json.loads(report.read_text())
    assert data["max_phi_found"] == 8 and data["mode"] == "branch_and_bound"
    assert json.loads(out.out)["optimal_classes"] == data["optimal_classes"]
    assert "elapsed_seconds" in data and "elapsed_seconds" not in json.loads(out.out)


def test_cli_verify_stdout_byte_identical(capsys):
    first = run(capsys, "verify", "max", "6", "--jobs", "1")[1].out
    second = run(capsys, "verify", "max", "6", "--jobs", "2")[1].out
    third = run(capsys, "verify", "max", "6", "--mode", "bnb")[1].out
    assert first == second
    assert json.loads(first)["optimal_classes"] == json.loads(third)["optimal_classes"]


def test_cli_verify_mismatch_exit(capsys, monkeypatch):
    from maxline import cli
    real = cli.verify_max

    def broken(m, mode, jobs=1):
        report = real(m, mode, jobs)
        report.formula_value += 1
        return report

    monkeypatch.setattr(cli, "verify_max", broken)
    assert run(capsys, "verify", "max", "4")[0] == 3


def test_cli_deterministic(capsys):
    first = run(capsys, "gen", "o", "9", "--format", "dot")[1].out
    assert run(capsys, "gen", "o", "9", "--format", "dot")[1].out == first
